#pragma once

#include "exosphere/bernoulli.hpp"
#include "exosphere/integer.hpp"
#include "exosphere/kervaire_milnor.hpp"
#include "exosphere/numtheory.hpp"
#include "exosphere/stem_data.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace exosphere {

enum class Verdict { Guaranteed, CriterionInapplicable, NotGuaranteedByThisCriterion };

struct ConditionCheck {
  std::string condition;
  bool passed = false;
  std::string witness;  // concrete numbers backing the check, may be empty
};

/// A criterion application: the verdict plus every hypothesis that was
/// checked, in the order checked. reasons is never empty.
struct Decision {
  Verdict verdict = Verdict::CriterionInapplicable;
  std::vector<ConditionCheck> reasons;
};

namespace detail {

inline std::string prime_set_string(const std::vector<Integer>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ", ";
    out += primes[i].str();
  }
  return out + "}";
}

}  // namespace detail

/// Every homotopy n-sphere of order coprime to p admits a free Z/p action,
/// so it suffices that p divides no possible prime factor of |Theta_n|.
inline Decision free_action_by_order(long long n, const Integer& p) {
  if (p < 2 || !is_prime(p))
    throw std::invalid_argument("free_action_by_order: p must be prime");
  const ThetaFactorSet fs = theta_prime_factors(n);
  Decision d;
  if (fs.theta_trivial) {
    d.reasons.push_back({"Theta_" + std::to_string(n) +
                             " is trivial, so only the standard sphere "
                             "occurs and its order is 1",
                         true, ""});
    d.verdict = Verdict::Guaranteed;
    return d;
  }
  const std::vector<Integer> primes = fs.possible_primes();
  const bool coprime =
      !std::binary_search(primes.begin(), primes.end(), p);
  if (fs.kervaire_killed_two && p == 2) {
    d.reasons.push_back({"the Kervaire invariant argument removes 2 from "
                             "the candidate primes in dimension 30",
                         true, ""});
  }
  d.reasons.push_back(
      {"p divides no possible prime factor of |Theta_" + std::to_string(n) +
           "|",
       coprime, "p = " + p.str() + ", candidate primes " +
                    detail::prime_set_string(primes)});
  d.verdict =
      coprime ? Verdict::Guaranteed : Verdict::NotGuaranteedByThisCriterion;
  return d;
}

/// Free Z/p actions on every homotopy n-sphere, p odd, via p-local
/// triviality of coker J below the beta_1 stem: there n-spheres are
/// p-locally bp, and the bp order is prime to p unless n = 4k - 1 with
/// p dividing 2^(2k-1) - 1 or num(B_2k / 2k).
inline Decision little_criterion(long long n, const Integer& p) {
  if (n < 5)
    throw std::invalid_argument("little_criterion: defined for n >= 5");
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("little_criterion: p must be an odd prime");
  Decision d;
  const Integer bound = coker_j_vanishing_bound(p);
  const bool below = n < bound;
  d.reasons.push_back({"n < 2p^2 - 2p - 2, so coker J is p-locally trivial",
                       below,
                       "n = " + std::to_string(n) + ", bound = " + bound.str()});
  if (!below) {
    d.verdict = Verdict::CriterionInapplicable;
    return d;
  }
  const long long r = n % 4;
  if (r != 3) {
    d.reasons.push_back(
        {"n mod 4 is 0, 1 or 2, so the bp order has no odd part", true,
         "n mod 4 = " + std::to_string(r)});
    d.verdict = Verdict::Guaranteed;
    return d;
  }
  const long long k = (n + 1) / 4;
  const bool mersenne_ok = !divides_mersenne(p, 2 * k - 1);
  d.reasons.push_back({"p does not divide 2^(2k-1) - 1", mersenne_ok,
                       "k = " + std::to_string(k)});
  const Integer numq = num_bernoulli_quotient(k, 2 * k);
  const bool quotient_ok = numq % p != 0;
  d.reasons.push_back({"p does not divide num(B_2k / 2k)", quotient_ok,
                       "num(B_" + std::to_string(2 * k) + " / " +
                           std::to_string(2 * k) + ") = " + numq.str()});
  d.verdict = (mersenne_ok && quotient_ok)
                  ? Verdict::Guaranteed
                  : Verdict::NotGuaranteedByThisCriterion;
  return d;
}

/// Free Z/p actions in dimension n = 4k - 1 with 2k - 1 prime, granted
/// p regular and p not +-1 mod 8. Regularity kills the Bernoulli factor;
/// the mod 8 condition keeps p out of every 2^q - 1 with q odd, since a
/// prime factor of such a number has 2 as a quadratic residue. All four
/// hypotheses must hold; any failure leaves the criterion inapplicable.
inline Decision funny_criterion(long long n, const Integer& p) {
  if (n < 1)
    throw std::invalid_argument("funny_criterion: dimension must be >= 1");
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("funny_criterion: p must be an odd prime");
  Decision d;
  const bool regular = is_regular(p);  // CutoffExceededError passes through
  d.reasons.push_back({"p is a regular prime", regular, "p = " + p.str()});
  const bool mod8_ok = !is_pm1_mod8(p);
  d.reasons.push_back(
      {"p is not +1 or -1 mod 8, so p divides no 2^q - 1 with q odd",
       mod8_ok, "p mod 8 = " + Integer(p % 8).str()});
  const bool shape_ok = n % 4 == 3;
  const long long k = shape_ok ? (n + 1) / 4 : 0;
  const bool exponent_prime = shape_ok && is_prime(Integer(2 * k - 1));
  d.reasons.push_back(
      {"n = 4k - 1 with 2k - 1 prime", shape_ok && exponent_prime,
       shape_ok ? "k = " + std::to_string(k) + ", 2k - 1 = " +
                      std::to_string(2 * k - 1)
                : "n mod 4 = " + std::to_string(n % 4)});
  const Integer bound = coker_j_vanishing_bound(p);
  const bool below = n < bound;
  d.reasons.push_back(
      {"n < 2p^2 - 2p - 2, imposed here although the published statement "
       "omits it",
       below, "bound = " + bound.str()});
  d.verdict = (regular && mod8_ok && shape_ok && exponent_prime && below)
                  ? Verdict::Guaranteed
                  : Verdict::CriterionInapplicable;
  return d;
}

enum class ActionKind { CircleAction, ZpAction, Involution, NoConclusion };

/// What a single Mahowald invariant yields on the target sphere: a smooth
/// circle or Z/p action with the stated fixed set at odd primes, or an
/// involution at p = 2 when the metastable-range conditions hold. For
/// involutions the conclusion only pins the sphere up to the bp ambiguity.
struct ActionConclusion {
  ActionKind kind = ActionKind::NoConclusion;
  long long p = 0;
  std::string source_name;
  long long source_stem = 0;
  std::string target_name;
  long long target_stem = 0;
  std::string fixed_set;
  long long fixed_dim = -1;
  bool bp_ambiguity = false;
  std::vector<std::string> failed_conditions;  // non-empty iff NoConclusion
};

inline ActionConclusion classify_schultz_stolz(const MahowaldEntry& e) {
  ActionConclusion c;
  c.p = e.p;
  c.source_name = e.source_name;
  c.source_stem = e.source_stem;
  c.target_name = e.target_name;
  c.target_stem = e.target_stem;
  const long long n = e.source_stem;
  const long long m = e.target_stem;
  if (e.p != 2) {
    if ((m - n) % 2 == 0) {
      c.kind = ActionKind::ZpAction;
      c.fixed_set = e.source_sphere;
      c.fixed_dim = n;
    } else {
      c.kind = ActionKind::CircleAction;
      c.fixed_dim = n - 1;
      c.fixed_set = "a " + std::to_string(n - 1) + "-dimensional fixed set";
    }
    return c;
  }
  std::vector<std::string> failed;
  if (!(m > 2 * n + 1))
    failed.push_back("m > 2n + 1 fails: m = " + std::to_string(m) +
                     ", 2n + 1 = " + std::to_string(2 * n + 1));
  const bool odd_case = m % 2 == 1 && (m - n) % 2 == 1;
  const bool even_case = (m - n) % 2 == 0 && m % 4 == 1;
  if (!odd_case && !even_case)
    failed.push_back(
        "neither (m odd and m - n odd) nor (m - n even and m = 1 mod 4): "
        "m = " +
        std::to_string(m) + ", n = " + std::to_string(n));
  if (!failed.empty()) {
    c.failed_conditions = std::move(failed);
    return c;
  }
  c.kind = ActionKind::Involution;
  c.fixed_set = e.source_sphere;
  c.fixed_dim = n;
  c.bp_ambiguity = true;
  return c;
}

/// Positive conclusions for every registry entry targeting stem m, in
/// registry order. NoConclusion entries are dropped; apply
/// classify_schultz_stolz directly to see why an entry yields nothing.
inline std::vector<ActionConclusion> actions_for_dimension(
    long long m, long long ceiling = 100) {
  std::vector<ActionConclusion> out;
  for (const MahowaldEntry& e : mahowald_registry(ceiling)) {
    if (e.target_stem != m) continue;
    ActionConclusion c = classify_schultz_stolz(e);
    if (c.kind == ActionKind::NoConclusion) continue;
    out.push_back(std::move(c));
  }
  return out;
}

/// (dimension, prime) -> asterisk for every registry entry whose
/// classification yields an action. The dataset's double asterisk at
/// (30, 2) has a different origin and is not produced here.
inline std::map<std::pair<long long, long long>, Annotation>
asterisk_annotations(long long ceiling = 100) {
  std::map<std::pair<long long, long long>, Annotation> out;
  for (const MahowaldEntry& e : mahowald_registry(ceiling)) {
    const ActionConclusion c = classify_schultz_stolz(e);
    if (c.kind == ActionKind::NoConclusion) continue;
    out.emplace(std::make_pair(c.target_stem, c.p), Annotation::Asterisk);
  }
  return out;
}

}  // namespace exosphere
