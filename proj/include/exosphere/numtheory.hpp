#pragma once

#include "exosphere/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace exosphere {

struct FactorEntry {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Prime factorization of a positive integer, factors ascending.
struct Factorization {
  Integer value;
  std::vector<FactorEntry> factors;

  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  Integer reassembled() const {
    Integer prod = 1;
    for (const auto& f : factors) {
      for (unsigned i = 0; i < f.exponent; ++i) prod *= f.prime;
    }
    return prod;
  }

  /// "2^5 * 31" style; "1" for the empty product.
  std::string to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
      if (!first) os << " * ";
      first = false;
      os << f.prime;
      if (f.exponent > 1) os << '^' << f.exponent;
    }
    return os.str();
  }
};

struct FactorOptions {
  std::uint32_t trial_bound = 1'000'000;
  std::uint64_t max_rho_iterations = 10'000'000;
};

/// Factoring ran out of its iteration budget. Carries whatever split off
/// cleanly plus the composite cofactor that resisted.
class FactorizationIncompleteError : public std::runtime_error {
 public:
  FactorizationIncompleteError(Factorization partial, Integer unfactored)
      : std::runtime_error("factorization incomplete: cofactor " +
                           unfactored.str() + " not split within budget"),
        partial_(std::move(partial)),
        unfactored_(std::move(unfactored)) {}

  const Factorization& partial() const { return partial_; }
  const Integer& unfactored() const { return unfactored_; }

 private:
  Factorization partial_;
  Integer unfactored_;
};

struct PrimalityResult {
  bool prime = false;
  /// True when the verdict is proven: deterministic bases below 2^64, or a
  /// compositeness witness. Large primality verdicts are probabilistic.
  bool certified = false;
};

inline Integer pow_mod(Integer base, const Integer& exp, const Integer& mod) {
  if (mod <= 0) throw std::domain_error("pow_mod: modulus must be positive");
  if (exp < 0) throw std::domain_error("pow_mod: exponent must be nonnegative");
  base %= mod;
  if (base < 0) base += mod;
  return boost::multiprecision::powm(base, exp, mod);
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin; the twelve bases below prove primality for
/// every n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  constexpr std::uint64_t bases[] = {2,  3,  5,  7,  11, 13,
                                     17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline int jacobi(Integer a, Integer n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (static_cast<unsigned>(a % 4) == 3 && static_cast<unsigned>(n % 4) == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool strong_prp_base2(const Integer& n) {
  Integer d = n - 1;
  int s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Integer x = pow_mod(2, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice
/// (P = 1, Q = (1 - D)/4, first D in 5, -7, 9, ... with (D|n) = -1).
inline bool strong_lucas_prp(const Integer& n) {
  Integer D = 5;
  for (int sign = 1;; sign = -sign) {
    Integer cand = sign > 0 ? D : Integer(-D);
    int j = jacobi(cand, n);
    if (j == 0) return false;
    if (j == -1) {
      D = cand;
      break;
    }
    D += 2;
  }
  const Integer P = 1;
  const Integer Q = (1 - D) / 4;

  Integer d = n + 1;
  int s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }

  auto reduce = [&](Integer x) {
    x %= n;
    if (x < 0) x += n;
    return x;
  };
  auto halve = [&](Integer x) {
    x = reduce(std::move(x));
    if (boost::multiprecision::bit_test(x, 0)) x += n;
    return Integer(x >> 1);
  };

  Integer U = 1;
  Integer V = reduce(P);
  Integer Qk = reduce(Q);
  for (unsigned i = boost::multiprecision::msb(d); i-- > 0;) {
    U = reduce(U * V);
    V = reduce(V * V - 2 * Qk);
    Qk = reduce(Qk * Qk);
    if (boost::multiprecision::bit_test(d, i)) {
      Integer U1 = halve(P * U + V);
      Integer V1 = halve(D * U + P * V);
      U = std::move(U1);
      V = std::move(V1);
      Qk = reduce(Qk * Q);
    }
  }
  if (U == 0 || V == 0) return true;
  for (int r = 1; r < s; ++r) {
    V = reduce(V * V - 2 * Qk);
    Qk = reduce(Qk * Qk);
    if (V == 0) return true;
  }
  return false;
}

/// Baillie-PSW: strong base-2 test plus strong Lucas test. No composite
/// passing both is known; verdicts here are still reported as uncertified.
inline bool is_probable_prime_large(const Integer& n) {
  if (!strong_prp_base2(n)) return false;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root == n) return false;
  return strong_lucas_prp(n);
}

inline Integer random_below(std::mt19937_64& rng, const Integer& n) {
  const unsigned words = boost::multiprecision::msb(n) / 64 + 1;
  Integer r = 0;
  for (unsigned i = 0; i < words; ++i) {
    r <<= 64;
    r += Integer(rng());
  }
  return r % n;
}

}  // namespace detail

inline PrimalityResult classify_prime(const Integer& n) {
  if (n < 2) return {false, true};
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return {detail::is_prime_u64(n.convert_to<std::uint64_t>()), true};
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u,
                          37u, 41u, 43u, 47u}) {
    if (boost::multiprecision::integer_modulus(n, p) == 0) return {false, true};
  }
  const bool prp = detail::is_probable_prime_large(n);
  return {prp, !prp};
}

inline bool is_prime(const Integer& n) { return classify_prime(n).prime; }

/// Ascending primes below bound, computed once per distinct bound.
inline const std::vector<std::uint32_t>& primes_below(std::uint32_t bound) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it != cache.end()) return it->second;
  std::vector<bool> composite(bound < 2 ? 0 : bound, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < bound;
         j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return cache.emplace(bound, std::move(primes)).first->second;
}

namespace detail {

/// Brent's cycle variant of Pollard rho with batched gcds. Returns a
/// nontrivial divisor of composite n, or 0 if max_iters squarings were
/// spent without one. Seeded per attempt, so results are reproducible.
inline Integer pollard_brent(const Integer& n, std::uint64_t max_iters) {
  using boost::multiprecision::gcd;
  std::uint64_t remaining = max_iters;
  auto spend = [&remaining]() {
    if (remaining == 0) return false;
    --remaining;
    return true;
  };
  for (std::uint64_t attempt = 0; remaining > 0; ++attempt) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^
                        (attempt * 0xbf58476d1ce4e5b9ull));
    Integer y = random_below(rng, n);
    Integer c = random_below(rng, n - 1) + 1;
    Integer x;
    Integer ys;
    Integer q = 1;
    Integer g = 1;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    bool exhausted = false;
    while (g == 1 && !exhausted) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        if (!spend()) {
          exhausted = true;
          break;
        }
        y = (y * y + c) % n;
      }
      std::uint64_t k = 0;
      while (k < r && g == 1 && !exhausted) {
        ys = y;
        const std::uint64_t lim = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          if (!spend()) {
            exhausted = true;
            break;
          }
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (exhausted) return 0;
    if (g == n) {
      g = 1;
      while (g == 1) {
        if (!spend()) return 0;
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
  return 0;
}

}  // namespace detail

/// Full factorization via trial division then rho splitting, primality
/// gating each cofactor. Throws FactorizationIncompleteError when a
/// composite survives the per-cofactor iteration budget.
inline Factorization factorize(const Integer& n,
                               const FactorOptions& opts = {}) {
  if (n <= 0) throw std::domain_error("factorize: argument must be positive");
  std::map<Integer, unsigned> acc;
  Integer m = n;
  for (std::uint32_t p : primes_below(opts.trial_bound)) {
    if (Integer(p) * p > m) break;
    while (boost::multiprecision::integer_modulus(m, p) == 0) {
      ++acc[p];
      m /= p;
    }
  }
  std::vector<Integer> pending;
  if (m > 1) pending.push_back(m);
  bool incomplete = false;
  Integer stuck = 1;
  while (!pending.empty()) {
    Integer c = std::move(pending.back());
    pending.pop_back();
    if (is_prime(c)) {
      ++acc[c];
      continue;
    }
    Integer d = detail::pollard_brent(c, opts.max_rho_iterations);
    if (d == 0) {
      incomplete = true;
      stuck *= c;
      continue;
    }
    pending.push_back(c / d);
    pending.push_back(std::move(d));
  }
  Factorization result;
  result.value = n;
  for (auto& [p, e] : acc) result.factors.push_back({p, e});
  if (incomplete) throw FactorizationIncompleteError(std::move(result), stuck);
  return result;
}

/// Does p divide 2^e - 1?
inline bool divides_mersenne(const Integer& p, const Integer& e) {
  if (p < 2) throw std::domain_error("divides_mersenne: p must be at least 2");
  if (e < 1)
    throw std::domain_error("divides_mersenne: exponent must be positive");
  if (p == 2) return false;
  return pow_mod(2, e, p) == 1;
}

/// p congruent to 1 or 7 mod 8, the residues splitting 2 in Q(sqrt 2).
inline bool is_pm1_mod8(const Integer& p) {
  if (p < 0) throw std::domain_error("is_pm1_mod8: argument must be positive");
  const unsigned r = static_cast<unsigned>(p % 8);
  return r == 1 || r == 7;
}

}  // namespace exosphere
