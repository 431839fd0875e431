#include <catch2/catch_amalgamated.hpp>

#include <exosphere/numtheory.hpp>

#include <cstdint>
#include <random>
#include <vector>

using exosphere::FactorOptions;
using exosphere::Factorization;
using exosphere::Integer;

namespace {

// Independent oracle: plain trial division on machine words.
std::vector<std::pair<std::uint64_t, unsigned>> naive_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer mersenne(unsigned e) { return (Integer(1) << e) - 1; }

}  // namespace

TEST_CASE("primality of small and mid-range integers") {
  REQUIRE_FALSE(exosphere::is_prime(0));
  REQUIRE_FALSE(exosphere::is_prime(1));
  REQUIRE(exosphere::is_prime(2));
  REQUIRE(exosphere::is_prime(3));
  REQUIRE_FALSE(exosphere::is_prime(4));
  REQUIRE(exosphere::is_prime(8191));
  REQUIRE_FALSE(exosphere::is_prime(2047));
  REQUIRE(exosphere::is_prime(1000003));
  REQUIRE(exosphere::is_prime(10000019));
  REQUIRE(exosphere::is_prime(10000079));
  REQUIRE(exosphere::is_prime(2147483647));
  REQUIRE_FALSE(exosphere::is_prime(2147493647));
  REQUIRE(exosphere::is_prime(mersenne(61)));
  REQUIRE_FALSE(exosphere::is_prime(mersenne(67)));
}

TEST_CASE("primality agrees with trial division on an initial segment") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    CAPTURE(n);
    REQUIRE(exosphere::is_prime(n) == naive_is_prime(n));
  }
}

TEST_CASE("primality beyond 64 bits") {
  const Integer prime("153289748932447906241");
  const Integer composite("153298748932447906241");  // 2001229 * 2979623 * 25708723
  REQUIRE(exosphere::is_prime(prime));
  REQUIRE_FALSE(exosphere::is_prime(composite));
  REQUIRE(exosphere::is_prime(Integer("26315271553053477373")));
  REQUIRE(exosphere::is_prime(Integer("1520097643918070802691")));

  auto r = exosphere::classify_prime(prime);
  REQUIRE(r.prime);
  REQUIRE_FALSE(r.certified);

  auto r2 = exosphere::classify_prime(mersenne(61));
  REQUIRE(r2.prime);
  REQUIRE(r2.certified);

  auto r3 = exosphere::classify_prime(composite);
  REQUIRE_FALSE(r3.prime);
  REQUIRE(r3.certified);
}

TEST_CASE("factorization of fixed values") {
  auto f = exosphere::factorize(2047);
  REQUIRE(f.to_string() == "23 * 89");

  auto g = exosphere::factorize(992);
  REQUIRE(g.to_string() == "2^5 * 31");

  auto h = exosphere::factorize(1448424448);
  REQUIRE(h.to_string() == "2^10 * 23 * 89 * 691");

  auto one = exosphere::factorize(1);
  REQUIRE(one.factors.empty());
  REQUIRE(one.to_string() == "1");

  auto m25 = exosphere::factorize(mersenne(25));
  REQUIRE(m25.to_string() == "31 * 601 * 1801");

  auto m47 = exosphere::factorize(mersenne(47));
  REQUIRE(m47.to_string() == "2351 * 4513 * 13264529");

  auto m49 = exosphere::factorize(mersenne(49));
  REQUIRE(m49.to_string() == "127 * 4432676798593");

  auto big = exosphere::factorize(Integer("153298748932447906241"));
  REQUIRE(big.to_string() == "2001229 * 2979623 * 25708723");

  auto p = exosphere::factorize(Integer("26315271553053477373"));
  REQUIRE(p.factors.size() == 1);
  REQUIRE(p.factors[0].exponent == 1);

  REQUIRE_THROWS_AS(exosphere::factorize(0), std::domain_error);
  REQUIRE_THROWS_AS(exosphere::factorize(-6), std::domain_error);
}

TEST_CASE("factorization matches trial division on random inputs") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t n = rng() % (std::uint64_t(1) << 32) + 1;
    CAPTURE(n);
    auto f = exosphere::factorize(n);
    auto expected = naive_factor(n);
    REQUIRE(f.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      REQUIRE(f.factors[i].prime == expected[i].first);
      REQUIRE(f.factors[i].exponent == expected[i].second);
    }
    REQUIRE(f.reassembled() == n);
  }
}

TEST_CASE("factor structure invariants on random inputs") {
  std::mt19937_64 rng(424257);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t n = rng() % (std::uint64_t(1) << 52) + 2;
    CAPTURE(n);
    auto f = exosphere::factorize(n);
    REQUIRE(f.reassembled() == n);
    Integer prev = 1;
    for (const auto& entry : f.factors) {
      REQUIRE(entry.prime > prev);
      REQUIRE(entry.exponent >= 1);
      REQUIRE(exosphere::is_prime(entry.prime));
      prev = entry.prime;
    }
  }
}

TEST_CASE("prime factors of Mersenne numbers lie in the right residue classes") {
  for (unsigned q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u,
                     43u, 47u}) {
    auto f = exosphere::factorize(mersenne(q));
    REQUIRE(f.reassembled() == mersenne(q));
    for (const auto& entry : f.factors) {
      CAPTURE(q, entry.prime);
      REQUIRE(exosphere::divides_mersenne(entry.prime, q));
      REQUIRE(exosphere::is_pm1_mod8(entry.prime));
    }
  }
}

TEST_CASE("factorization budget exhaustion reports the stuck cofactor") {
  const Integer semiprime("100000980001501");  // 10000019 * 10000079
  FactorOptions opts;
  opts.trial_bound = 2;
  opts.max_rho_iterations = 40;
  try {
    exosphere::factorize(semiprime, opts);
    FAIL("expected FactorizationIncompleteError");
  } catch (const exosphere::FactorizationIncompleteError& e) {
    REQUIRE(e.unfactored() == semiprime);
    REQUIRE(e.partial().value == semiprime);
    REQUIRE(e.partial().factors.empty());
  }
  // The same number splits instantly once trial division is allowed to work.
  auto full = exosphere::factorize(semiprime);
  REQUIRE(full.to_string() == "10000019 * 10000079");
}

TEST_CASE("modular exponentiation") {
  REQUIRE(exosphere::pow_mod(2, 10, 1000) == 24);
  REQUIRE(exosphere::pow_mod(2, 0, 7) == 1);
  REQUIRE(exosphere::pow_mod(-3, 3, 7) == 1);
  REQUIRE(exosphere::pow_mod(5, 117, 1) == 0);
  REQUIRE_THROWS_AS(exosphere::pow_mod(2, -1, 7), std::domain_error);
  REQUIRE_THROWS_AS(exosphere::pow_mod(2, 3, 0), std::domain_error);

  std::mt19937_64 rng(99173);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = rng() % 100000;
    const std::uint64_t e = rng() % 50;
    const std::uint64_t m = rng() % 99990 + 10;
    Integer direct = 1;
    for (std::uint64_t i = 0; i < e; ++i) direct = direct * a % m;
    CAPTURE(a, e, m);
    REQUIRE(exosphere::pow_mod(a, e, m) == direct);
  }
}

TEST_CASE("Mersenne divisibility checks") {
  REQUIRE(exosphere::divides_mersenne(7, 3));
  REQUIRE(exosphere::divides_mersenne(23, 11));
  REQUIRE(exosphere::divides_mersenne(89, 11));
  REQUIRE_FALSE(exosphere::divides_mersenne(127, 11));
  REQUIRE(exosphere::divides_mersenne(127, 7));
  REQUIRE(exosphere::divides_mersenne(7, 6));
  REQUIRE_FALSE(exosphere::divides_mersenne(2, 5));
  REQUIRE_THROWS_AS(exosphere::divides_mersenne(1, 3), std::domain_error);
  REQUIRE_THROWS_AS(exosphere::divides_mersenne(7, 0), std::domain_error);
}

TEST_CASE("residues mod 8") {
  REQUIRE(exosphere::is_pm1_mod8(7));
  REQUIRE(exosphere::is_pm1_mod8(17));
  REQUIRE(exosphere::is_pm1_mod8(23));
  REQUIRE(exosphere::is_pm1_mod8(31));
  REQUIRE_FALSE(exosphere::is_pm1_mod8(3));
  REQUIRE_FALSE(exosphere::is_pm1_mod8(5));
  REQUIRE_FALSE(exosphere::is_pm1_mod8(11));
  REQUIRE_FALSE(exosphere::is_pm1_mod8(13));
  REQUIRE_FALSE(exosphere::is_pm1_mod8(2));
}
