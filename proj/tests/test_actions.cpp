#include "exosphere/actions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

using exosphere::ActionConclusion;
using exosphere::ActionKind;
using exosphere::Annotation;
using exosphere::DataUnavailableError;
using exosphere::Decision;
using exosphere::Integer;
using exosphere::MahowaldEntry;
using exosphere::Verdict;

namespace {

void require_consistent(const Decision& d) {
  REQUIRE_FALSE(d.reasons.empty());
  if (d.verdict == Verdict::Guaranteed)
    for (const auto& check : d.reasons) REQUIRE(check.passed);
}

const MahowaldEntry* find_entry(const std::vector<MahowaldEntry>& reg,
                                long long p, const std::string& src) {
  for (const auto& e : reg)
    if (e.p == p && e.source_name == src) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("free_action_by_order") {
  REQUIRE(exosphere::free_action_by_order(23, 5).verdict ==
          Verdict::Guaranteed);
  REQUIRE(exosphere::free_action_by_order(23, 691).verdict ==
          Verdict::NotGuaranteedByThisCriterion);
  REQUIRE(exosphere::free_action_by_order(23, 2).verdict ==
          Verdict::NotGuaranteedByThisCriterion);
  REQUIRE(exosphere::free_action_by_order(23, 89).verdict ==
          Verdict::NotGuaranteedByThisCriterion);
  REQUIRE(exosphere::free_action_by_order(23, 7).verdict ==
          Verdict::Guaranteed);

  // dimension 30: only 3 survives as a candidate prime
  REQUIRE(exosphere::free_action_by_order(30, 2).verdict ==
          Verdict::Guaranteed);
  REQUIRE(exosphere::free_action_by_order(30, 3).verdict ==
          Verdict::NotGuaranteedByThisCriterion);
  REQUIRE(exosphere::free_action_by_order(30, 5).verdict ==
          Verdict::Guaranteed);

  // trivial groups make every prime fine
  for (long long n : {1, 4, 12, 56, 61})
    for (long long p : {2, 3, 691})
      REQUIRE(exosphere::free_action_by_order(n, p).verdict ==
              Verdict::Guaranteed);

  REQUIRE_THROWS_AS(exosphere::free_action_by_order(101, 5),
                    DataUnavailableError);
  REQUIRE_THROWS_AS(exosphere::free_action_by_order(0, 5),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::free_action_by_order(10, 4),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::free_action_by_order(10, 1),
                    std::invalid_argument);

  for (long long n = 1; n <= 100; ++n)
    for (long long p : {2, 3, 5, 691}) {
      const Decision d = exosphere::free_action_by_order(n, p);
      require_consistent(d);
      REQUIRE(d.verdict != Verdict::CriterionInapplicable);
    }
}

TEST_CASE("little_criterion") {
  REQUIRE(exosphere::little_criterion(23, 5).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::little_criterion(38, 5).verdict ==
          Verdict::CriterionInapplicable);  // bound is strict
  REQUIRE(exosphere::little_criterion(23, 3).verdict ==
          Verdict::CriterionInapplicable);
  REQUIRE(exosphere::little_criterion(24, 5).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::little_criterion(7, 3).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::little_criterion(7, 5).verdict == Verdict::Guaranteed);

  // 7 divides t_2 = 28 through the Mersenne part
  REQUIRE(exosphere::little_criterion(7, 7).verdict ==
          Verdict::NotGuaranteedByThisCriterion);
  // 691 divides t_6 through the Bernoulli part
  REQUIRE(exosphere::little_criterion(23, 691).verdict ==
          Verdict::NotGuaranteedByThisCriterion);

  REQUIRE_THROWS_AS(exosphere::little_criterion(4, 5),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::little_criterion(23, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::little_criterion(23, 15),
                    std::invalid_argument);

  for (long long n = 5; n <= 99; ++n)
    for (long long p : {3, 5, 7, 13, 691}) {
      const Decision d = exosphere::little_criterion(n, p);
      require_consistent(d);
      if (n % 4 == 3 && d.verdict == Verdict::Guaranteed) {
        // a guarantee must mean p really is prime to the bp order
        REQUIRE(exosphere::t_k((n + 1) / 4) % p != 0);
      }
      if (d.verdict == Verdict::Guaranteed && n >= 7 && n <= 100 &&
          !exosphere::theta_prime_factors(n).theta_trivial) {
        // below the vanishing bound the tables never list p either
        for (const Integer& q :
             exosphere::theta_prime_factors(n).possible_primes())
          REQUIRE(q != p);
      }
    }
}

TEST_CASE("funny_criterion") {
  REQUIRE(exosphere::funny_criterion(11, 5).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::funny_criterion(7, 17).verdict ==
          Verdict::CriterionInapplicable);  // 17 = 1 mod 8
  REQUIRE(exosphere::funny_criterion(23, 13).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::funny_criterion(7, 3).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::funny_criterion(15, 5).verdict == Verdict::Guaranteed);
  REQUIRE(exosphere::funny_criterion(19, 5).verdict ==
          Verdict::CriterionInapplicable);  // 2k - 1 = 9 composite
  REQUIRE(exosphere::funny_criterion(24, 5).verdict ==
          Verdict::CriterionInapplicable);  // not of the form 4k - 1
  REQUIRE(exosphere::funny_criterion(23, 37).verdict ==
          Verdict::CriterionInapplicable);  // 37 is irregular
  REQUIRE(exosphere::funny_criterion(23, 7).verdict ==
          Verdict::CriterionInapplicable);  // 7 = -1 mod 8

  REQUIRE_THROWS_AS(exosphere::funny_criterion(11, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::funny_criterion(11, 9),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(exosphere::funny_criterion(0, 5),
                    std::invalid_argument);

  // whenever this criterion fires, the general one must agree
  for (long long n = 5; n <= 99; ++n)
    for (long long p : {3, 5, 11, 13, 19, 29, 37, 43})
      if (exosphere::funny_criterion(n, p).verdict == Verdict::Guaranteed) {
        REQUIRE(exosphere::little_criterion(n, p).verdict ==
                Verdict::Guaranteed);
      }

  for (long long p : {3, 5, 11, 13})
    require_consistent(exosphere::funny_criterion(11, p));
}

TEST_CASE("classify_schultz_stolz on registry entries") {
  const auto reg = exosphere::mahowald_registry();

  const MahowaldEntry* a2 = find_entry(reg, 3, "alpha_2");
  REQUIRE(a2 != nullptr);
  const ActionConclusion z3 = exosphere::classify_schultz_stolz(*a2);
  REQUIRE(z3.kind == ActionKind::ZpAction);
  REQUIRE(z3.fixed_set == "S^7");
  REQUIRE(z3.fixed_dim == 7);
  REQUIRE_FALSE(z3.bp_ambiguity);
  REQUIRE(z3.failed_conditions.empty());

  const MahowaldEntry* a1_5 = find_entry(reg, 5, "alpha_1");
  REQUIRE(a1_5 != nullptr);
  const ActionConclusion t5 = exosphere::classify_schultz_stolz(*a1_5);
  REQUIRE(t5.kind == ActionKind::CircleAction);
  REQUIRE(t5.fixed_dim == 6);

  const MahowaldEntry* sigma = find_entry(reg, 2, "sigma");
  REQUIRE(sigma != nullptr);
  const ActionConclusion s2 = exosphere::classify_schultz_stolz(*sigma);
  REQUIRE(s2.kind == ActionKind::NoConclusion);
  REQUIRE(s2.failed_conditions.size() == 2);
  REQUIRE(s2.failed_conditions.front().find("m > 2n + 1") !=
          std::string::npos);

  const MahowaldEntry* e9 = find_entry(reg, 2, "eta^2 sigma");
  REQUIRE(e9 != nullptr);
  const ActionConclusion inv = exosphere::classify_schultz_stolz(*e9);
  REQUIRE(inv.kind == ActionKind::Involution);
  REQUIRE(inv.bp_ambiguity);
  REQUIRE(inv.fixed_set ==
          "the exotic 9-sphere corresponding to eta^2 sigma");

  // structural invariants over the whole registry
  for (const MahowaldEntry& e : reg) {
    const ActionConclusion c = exosphere::classify_schultz_stolz(e);
    REQUIRE((c.failed_conditions.empty()) ==
            (c.kind != ActionKind::NoConclusion));
    REQUIRE(c.bp_ambiguity == (c.kind == ActionKind::Involution));
    switch (c.kind) {
      case ActionKind::Involution:
        REQUIRE(e.p == 2);
        break;
      case ActionKind::ZpAction:
      case ActionKind::CircleAction:
        REQUIRE(e.p % 2 == 1);
        break;
      case ActionKind::NoConclusion:
        REQUIRE(e.p == 2);  // odd-prime entries always conclude
        break;
    }
    if (c.kind == ActionKind::CircleAction)
      REQUIRE(c.fixed_dim == e.source_stem - 1);
  }
}

TEST_CASE("involutions land exactly where published") {
  const auto reg = exosphere::mahowald_registry();
  std::map<long long, std::string> involutions;
  for (const MahowaldEntry& e : reg) {
    if (e.p != 2) continue;
    const ActionConclusion c = exosphere::classify_schultz_stolz(e);
    if (c.kind == ActionKind::Involution)
      involutions.emplace(c.target_stem, c.fixed_set);
  }
  const std::map<long long, std::string> expected = {
      {9, "S^3"},
      {17, "S^7"},
      {21, "the exotic 9-sphere corresponding to eta^2 sigma"},
      {33, "S^11"}};
  REQUIRE(involutions == expected);
}

TEST_CASE("explicit p=3 entries reproduce the published action list") {
  const auto reg = exosphere::mahowald_registry();
  const std::vector<std::string> sources = {"alpha_2",     "alpha_{3/2}",
                                            "alpha_3",     "alpha_4",
                                            "alpha_{6/2}", "alpha_6"};
  std::vector<ActionConclusion> got;
  for (const auto& src : sources) {
    const MahowaldEntry* e = find_entry(reg, 3, src);
    REQUIRE(e != nullptr);
    got.push_back(exosphere::classify_schultz_stolz(*e));
  }
  REQUIRE(got[0].kind == ActionKind::ZpAction);
  REQUIRE(got[0].target_stem == 23);
  REQUIRE(got[0].fixed_set == "S^7");
  const std::vector<std::pair<long long, long long>> circles = {
      {38, 10}, {42, 10}, {50, 14}, {86, 22}, {90, 22}};
  for (std::size_t i = 1; i < got.size(); ++i) {
    REQUIRE(got[i].kind == ActionKind::CircleAction);
    REQUIRE(got[i].target_stem == circles[i - 1].first);
    REQUIRE(got[i].fixed_dim == circles[i - 1].second);
  }
}

TEST_CASE("actions_for_dimension") {
  const auto at38 = exosphere::actions_for_dimension(38);
  REQUIRE(at38.size() == 2);
  REQUIRE(at38[0].kind == ActionKind::CircleAction);
  REQUIRE(at38[0].p == 3);
  REQUIRE(at38[0].fixed_dim == 10);
  REQUIRE(at38[1].kind == ActionKind::CircleAction);
  REQUIRE(at38[1].p == 5);
  REQUIRE(at38[1].fixed_dim == 6);

  REQUIRE(exosphere::actions_for_dimension(24).empty());
  REQUIRE(exosphere::actions_for_dimension(14).empty());  // sigma^2 fails

  const auto at9 = exosphere::actions_for_dimension(9);
  REQUIRE(at9.size() == 1);
  REQUIRE(at9[0].kind == ActionKind::Involution);
  REQUIRE(at9[0].fixed_set == "S^3");

  const auto at23 = exosphere::actions_for_dimension(23);
  REQUIRE(at23.size() == 1);  // the p=2 entry at 23 fails, alpha_2 stands
  REQUIRE(at23[0].kind == ActionKind::ZpAction);
  REQUIRE(at23[0].p == 3);
}

TEST_CASE("asterisk_annotations matches the embedded dataset") {
  const auto derived = exosphere::asterisk_annotations();
  std::set<std::pair<long long, long long>> derived_pairs;
  for (const auto& [key, ann] : derived) {
    REQUIRE(ann == Annotation::Asterisk);
    derived_pairs.insert(key);
  }

  std::set<std::pair<long long, long long>> dataset_pairs;
  for (long long n = 7; n <= 100; ++n)
    for (const auto& ap : exosphere::coker_j_row(n).primes)
      if (ap.annotation == Annotation::Asterisk)
        dataset_pairs.emplace(n, ap.prime.convert_to<long long>());

  REQUIRE(derived_pairs == dataset_pairs);
  REQUIRE(derived_pairs.size() == 15);
  REQUIRE(derived_pairs.count({17, 2}) == 1);
  REQUIRE(derived_pairs.count({23, 3}) == 1);
  REQUIRE(derived_pairs.count({82, 7}) == 1);
  REQUIRE(derived_pairs.count({14, 2}) == 0);
  REQUIRE(derived_pairs.count({30, 2}) == 0);
}
