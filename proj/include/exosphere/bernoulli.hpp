#pragma once

#include "exosphere/integer.hpp"
#include "exosphere/numtheory.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace exosphere {

/// Even indices j in [2, p-3] where p divides the Bernoulli numerator.
struct IrregularityReport {
  Integer p;
  std::vector<long long> irregular_indices;

  bool regular() const { return irregular_indices.empty(); }
};

/// Largest p for which the exhaustive regularity scan over [2, p-3] is
/// attempted; the scan is quadratic in p.
inline constexpr std::int64_t kRegularityScanCutoff = 10'000;

namespace detail {

/// Extends the memo through index m using the binomial recurrence
/// sum_{j=0..m} C(m+1, j) B_j = 0. Caller holds the cache lock.
inline const Rational& bernoulli_extend(std::size_t m,
                                        std::vector<Rational>& cache) {
  if (cache.empty()) {
    cache.emplace_back(1);
    cache.emplace_back(Rational(-1, 2));
  }
  while (cache.size() <= m) {
    const std::size_t t = cache.size();
    Rational sum = 0;
    Integer c = 1;  // C(t+1, j), updated multiplicatively
    for (std::size_t j = 0; j < t; ++j) {
      sum += Rational(c) * cache[j];
      c = c * Integer(t + 1 - j) / Integer(j + 1);
    }
    cache.push_back(-sum / Integer(t + 1));
  }
  return cache[m];
}

/// Exact B_m for any m >= 0, odd indices included.
inline Rational bernoulli_raw(std::size_t m) {
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  return bernoulli_extend(m, cache);
}

/// Residues B_0..B_j mod p via the same recurrence in mod-p arithmetic,
/// with a Pascal row supplying the binomials. Returns the residue vector;
/// stop_early truncates right after the first even index with residue 0.
/// Word-sized moduli run on machine integers.
inline std::vector<Integer> bernoulli_row_mod_p(const Integer& p,
                                                std::uint64_t jmax,
                                                bool stop_early) {
  if (p < (Integer(1) << 62)) {
    const std::uint64_t pw = p.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> b;
    b.reserve(jmax + 1);
    b.push_back(1);
    b.push_back((pw - 1) / 2);  // -1/2 mod p
    std::vector<std::uint64_t> row = {1, 2, 1};  // C(2, .)
    for (std::uint64_t m = 2; m <= jmax; ++m) {
      row.push_back(1);
      for (std::uint64_t i = m; i >= 1; --i)
        row[i] = (row[i] + row[i - 1]) % pw;
      std::uint64_t s = 0;
      for (std::uint64_t i = 0; i < m; ++i)
        s = (s + mulmod_u64(row[i], b[i], pw)) % pw;
      const std::uint64_t inv = powmod_u64((m + 1) % pw, pw - 2, pw);
      b.push_back(mulmod_u64((pw - s) % pw, inv, pw));
      if (stop_early && b[m] == 0 && m % 2 == 0) break;
    }
    return std::vector<Integer>(b.begin(), b.end());
  }
  std::vector<Integer> b;
  b.reserve(jmax + 1);
  b.emplace_back(1);
  b.push_back((p - 1) / 2);
  std::vector<Integer> row = {1, 2, 1};
  for (std::uint64_t m = 2; m <= jmax; ++m) {
    row.emplace_back(1);
    for (std::uint64_t i = m; i >= 1; --i)
      row[i] = (row[i] + row[i - 1]) % p;
    Integer s = 0;
    for (std::uint64_t i = 0; i < m; ++i) s = (s + row[i] * b[i]) % p;
    b.push_back((p - s) * pow_mod(m + 1, p - 2, p) % p);
    if (stop_early && b[m] == 0 && m % 2 == 0) break;
  }
  return b;
}

inline std::vector<long long> even_zero_indices(const std::vector<Integer>& b) {
  std::vector<long long> zeros;
  for (std::size_t j = 2; j < b.size(); j += 2) {
    if (b[j] == 0) zeros.push_back(static_cast<long long>(j));
  }
  return zeros;
}

inline void require_odd_prime(const Integer& p, const char* who) {
  if (p < 3 || !boost::multiprecision::bit_test(p, 0) || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace detail

/// Exact Bernoulli number B_m for even m >= 2.
inline Rational bernoulli(long long m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("bernoulli: index must be even and >= 2");
  return detail::bernoulli_raw(static_cast<std::size_t>(m));
}

/// |numerator| of the reduced fraction B_2k / d. Reduction against d can
/// cancel numerator factors, so this is not simply |numerator(B_2k)|.
inline Integer num_bernoulli_quotient(long long k, const Integer& d) {
  if (k < 1)
    throw std::invalid_argument("num_bernoulli_quotient: k must be >= 1");
  if (d < 1)
    throw std::invalid_argument("num_bernoulli_quotient: d must be positive");
  const Rational q =
      detail::bernoulli_raw(static_cast<std::size_t>(2 * k)) / Rational(d);
  return boost::multiprecision::abs(numerator_of(q));
}

/// B_j mod p for even j in [2, p-3]. The index bound keeps p out of the
/// von Staudt-Clausen denominator, so the residue is well defined.
inline Integer bernoulli_mod_p(long long j, const Integer& p) {
  detail::require_odd_prime(p, "bernoulli_mod_p");
  if (j < 2 || j % 2 != 0 || Integer(j) > p - 3)
    throw std::invalid_argument(
        "bernoulli_mod_p: index must be even and within [2, p-3]");
  return detail::bernoulli_row_mod_p(p, static_cast<std::uint64_t>(j), false)
      .back();
}

/// Exhaustive scan of even j in [2, p-3] for indices with p | numerator(B_j).
inline IrregularityReport irregularity_report(const Integer& p) {
  detail::require_odd_prime(p, "irregularity_report");
  if (p > kRegularityScanCutoff)
    throw CutoffExceededError(
        "irregularity_report: exhaustive scan is limited to p <= 10^4");
  IrregularityReport report;
  report.p = p;
  if (p == 3) return report;  // empty index range
  report.irregular_indices = detail::even_zero_indices(
      detail::bernoulli_row_mod_p(p, p.convert_to<std::uint64_t>() - 3, false));
  return report;
}

/// True iff p divides no Bernoulli numerator B_j, even j <= p-3.
///
/// Irregularity needs only one witness index, so the scan stops at the
/// first hit and works for p of any size. Certifying regularity needs the
/// whole range and stays behind the same cutoff as irregularity_report.
inline bool is_regular(const Integer& p) {
  detail::require_odd_prime(p, "is_regular");
  if (p == 3) return true;
  if (p <= kRegularityScanCutoff) {
    return detail::even_zero_indices(
               detail::bernoulli_row_mod_p(
                   p, p.convert_to<std::uint64_t>() - 3, true))
        .empty();
  }
  constexpr std::uint64_t kWitnessHorizon = 512;
  if (!detail::even_zero_indices(
           detail::bernoulli_row_mod_p(p, kWitnessHorizon, true))
           .empty())
    return false;
  throw CutoffExceededError(
      "is_regular: no irregularity witness below index 512 and certifying "
      "regularity is limited to p <= 10^4");
}

}  // namespace exosphere
