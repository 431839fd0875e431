#pragma once

#include "exosphere/bernoulli.hpp"
#include "exosphere/integer.hpp"
#include "exosphere/numtheory.hpp"
#include "exosphere/stem_data.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace exosphere {

enum class BpKind { Trivial, OrderTwo, Cyclic };

/// The group of homotopy (4k-1)-spheres bounding parallelizable manifolds,
/// cyclic of the order below; trivial or order two in the other residues.
/// uncertain marks the single dimension (125) where triviality of the
/// order-two candidate is still open.
struct ThetaBpGroup {
  BpKind kind = BpKind::Trivial;
  Integer order = 1;
  long long k = 0;  // n = 4k - 1 when kind == Cyclic
  bool uncertain = false;
};

/// Order of the cyclic group in dimension 4k - 1 for k >= 2:
///   t_k = a_k * 2^(2k-2) * (2^(2k-1) - 1) * num(B_2k / 4k),
/// a_k = 1 for k even, 2 for k odd.
inline Integer t_k(long long k) {
  if (k < 2) throw std::invalid_argument("t_k: defined for k >= 2");
  const Integer lead = (k % 2 == 0) ? 1 : 2;
  return lead * (Integer(1) << (2 * k - 2)) *
         ((Integer(1) << (2 * k - 1)) - 1) *
         num_bernoulli_quotient(k, 4 * k);
}

inline ThetaBpGroup theta_bp(long long n) {
  if (n < 1) throw std::invalid_argument("theta_bp: dimension must be >= 1");
  ThetaBpGroup g;
  if (n % 2 == 0) return g;
  if (n % 4 == 1) {
    switch (n) {
      case 1:
      case 5:
      case 13:
      case 29:
      case 61:
        return g;
      default:
        g.kind = BpKind::OrderTwo;
        g.order = 2;
        g.uncertain = (n == 125);
        return g;
    }
  }
  if (n == 3) return g;  // no exotic 3-spheres, so the k = 1 case never arises
  g.kind = BpKind::Cyclic;
  g.k = (n + 1) / 4;
  g.order = t_k(g.k);
  return g;
}

/// Primes dividing the order of the bp subgroup, ascending. Computed by
/// factoring the group order, never by table lookup.
inline std::vector<Integer> theta_bp_prime_factors(long long n) {
  const ThetaBpGroup g = theta_bp(n);
  if (g.kind == BpKind::Trivial) return {};
  if (g.kind == BpKind::OrderTwo) return {Integer(2)};

  static std::mutex mu;
  static std::map<long long, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> primes = factorize(g.order).primes();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(primes)).first->second;
}

/// Upper bound on the primes dividing |Theta_n|: primes of the bp order
/// together with the tabulated coker-J primes. In dimension 30 the
/// Kervaire invariant removes the candidate 2 from the union.
struct ThetaFactorSet {
  long long n = 0;
  std::vector<Integer> bp_primes;      // ascending
  std::vector<Integer> cokerj_primes;  // ascending
  bool theta_trivial = false;
  bool kervaire_killed_two = false;

  std::vector<Integer> possible_primes() const {
    std::set<Integer> u(bp_primes.begin(), bp_primes.end());
    u.insert(cokerj_primes.begin(), cokerj_primes.end());
    if (kervaire_killed_two) u.erase(Integer(2));
    return {u.begin(), u.end()};
  }
};

inline ThetaFactorSet theta_prime_factors(long long n) {
  if (n < 1)
    throw std::invalid_argument(
        "theta_prime_factors: dimension must be >= 1");
  if (n > 100)
    throw DataUnavailableError(
        "theta_prime_factors: coker-J data unavailable above dimension 100");
  ThetaFactorSet out;
  out.n = n;
  const CokerJRow row = coker_j_row(n);
  if (row.no_data || row.theta_trivial) {
    // no_data rows sit below the table, where no exotic spheres exist
    out.theta_trivial = true;
    return out;
  }
  out.bp_primes = theta_bp_prime_factors(n);
  out.cokerj_primes.reserve(row.primes.size());
  for (const AnnotatedPrime& ap : row.primes)
    out.cokerj_primes.push_back(ap.prime);
  out.kervaire_killed_two = (n == 30);
  return out;
}

/// Coker J is p-locally trivial in dimensions below 2p^2 - 2p - 2, the
/// stem of beta_1.
inline Integer coker_j_vanishing_bound(const Integer& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument(
        "coker_j_vanishing_bound: p must be an odd prime");
  return 2 * p * p - 2 * p - 2;
}

}  // namespace exosphere
