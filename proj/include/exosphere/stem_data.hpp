#pragma once

#include "exosphere/appendix_data.hpp"
#include "exosphere/integer.hpp"
#include "exosphere/numtheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace exosphere {

enum class Annotation { None, Asterisk, DoubleAsterisk };

struct AnnotatedPrime {
  Integer prime;
  Annotation annotation = Annotation::None;

  friend bool operator==(const AnnotatedPrime&, const AnnotatedPrime&) =
      default;
};

/// One tabulated coker-J row. Dimensions below the tabulated range carry
/// no_data (no exotic spheres are listed there), which is distinct from a
/// present-but-empty factor list.
struct CokerJRow {
  long long n = 0;
  std::vector<AnnotatedPrime> primes;  // ascending
  bool theta_trivial = false;
  bool no_data = false;
};

enum class Relation { Equality, UpToUnit, Containment };

/// One published Mahowald invariant M(source) ~ target, stems included so
/// no homotopy theory is ever recomputed. Names are opaque display strings.
/// source_sphere records which homotopy sphere realizes the source class
/// under Pontryagin-Thom; standard unless published otherwise.
struct MahowaldEntry {
  long long p = 0;
  std::string source_name;
  long long source_stem = 0;
  std::string target_name;
  long long target_stem = 0;
  Relation relation = Relation::Equality;
  std::string citation;
  std::string source_sphere;
};

namespace detail {

struct AppendixRow {
  long long n = 0;
  bool trivial = false;
  std::vector<AnnotatedPrime> cokerj;
  std::vector<std::string> bp_tokens;
};

inline std::vector<std::string> split_tokens(const std::string& cell) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(cell);
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

inline const std::map<long long, AppendixRow>& appendix_rows() {
  static const std::map<long long, AppendixRow> rows = [] {
    std::map<long long, AppendixRow> out;
    std::istringstream in(kAppendixTable);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      AppendixRow row;
      const auto bar1 = line.find('|');
      row.n = std::stoll(line.substr(0, bar1));
      const std::string rest = line.substr(bar1 + 1);
      if (rest == "trivial") {
        row.trivial = true;
        out.emplace(row.n, std::move(row));
        continue;
      }
      const auto bar2 = rest.find('|');
      const std::string cokerj_cell = rest.substr(7, bar2 - 7);  // "cokerJ="
      const std::string bp_cell = rest.substr(bar2 + 4);         // "bp="
      for (std::string tok : split_tokens(cokerj_cell)) {
        AnnotatedPrime ap;
        while (!tok.empty() && tok.back() == '*') {
          ap.annotation = ap.annotation == Annotation::None
                              ? Annotation::Asterisk
                              : Annotation::DoubleAsterisk;
          tok.pop_back();
        }
        ap.prime = Integer(tok);
        row.cokerj.push_back(std::move(ap));
      }
      row.bp_tokens = split_tokens(bp_cell);
      out.emplace(row.n, std::move(row));
    }
    return out;
  }();
  return rows;
}

inline void require_table_dimension(long long n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) +
                                ": dimension must be positive");
  if (n > 100)
    throw DataUnavailableError(std::string(who) +
                               ": no tabulated data above dimension 100");
}

inline void require_odd_prime_small(long long p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace detail

inline CokerJRow coker_j_row(long long n) {
  detail::require_table_dimension(n, "coker_j_row");
  CokerJRow row;
  row.n = n;
  if (n < 7) {
    row.no_data = true;
    return row;
  }
  const auto& raw = detail::appendix_rows().at(n);
  row.theta_trivial = raw.trivial;
  row.primes = raw.cokerj;
  return row;
}

/// The published bp cell, token-for-token (two mechanical transcription
/// repairs noted in the dataset header). Empty for even rows, trivial rows
/// and dimensions below the tabulated range. Used only for auditing; live
/// values are recomputed.
inline std::vector<std::string> published_bp_tokens(long long n) {
  detail::require_table_dimension(n, "published_bp_tokens");
  if (n < 7) return {};
  return detail::appendix_rows().at(n).bp_tokens;
}

/// Stem of alpha_i at an odd prime p.
inline long long alpha_stem(long long p, long long i) {
  detail::require_odd_prime_small(p, "alpha_stem");
  if (i < 1) throw std::invalid_argument("alpha_stem: i must be positive");
  return 2 * i * (p - 1) - 1;
}

/// Stem of beta_i at an odd prime p.
inline long long beta_stem(long long p, long long i) {
  detail::require_odd_prime_small(p, "beta_stem");
  if (i < 1) throw std::invalid_argument("beta_stem: i must be positive");
  return 2 * i * (p * p - 1) - 2 * (p - 1) - 2;
}

/// Stem of beta_{p/2}, defined for primes p >= 5.
inline long long beta_p_over_2_stem(long long p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("beta_p_over_2_stem: p must be a prime >= 5");
  return 2 * p * (p * p - 1) - 4 * (p - 1) - 2;
}

/// Stem of alpha_{p/2}, the source paired with beta_{p/2}.
inline long long alpha_p_over_2_stem(long long p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("alpha_p_over_2_stem: p must be a prime >= 5");
  return 2 * p * (p - 1) - 1;
}

/// Every published Mahowald invariant with target stem <= max_stem:
/// the alpha-to-beta families (p >= 5 everywhere; p = 3 for i = 0, 1, 5
/// mod 9), the beta_{p/2} containments, and the explicit low-dimensional
/// lists at p = 3 and p = 2. Sorted by (p, target stem, source stem).
inline std::vector<MahowaldEntry> mahowald_registry(long long max_stem = 100) {
  if (max_stem < 0)
    throw std::invalid_argument("mahowald_registry: negative stem ceiling");
  std::vector<MahowaldEntry> entries;
  auto add = [&](long long p, std::string src, long long ns, std::string tgt,
                 long long ms, Relation rel, const char* cite,
                 std::string sphere = "") {
    if (ms > max_stem) return;
    if (sphere.empty()) sphere = "S^" + std::to_string(ns);
    entries.push_back({p, std::move(src), ns, std::move(tgt), ms, rel, cite,
                       std::move(sphere)});
  };

  // M(alpha_i) = beta_i for p >= 5.
  for (long long p = 5;; p += 2) {
    if (!is_prime(p)) continue;
    if (beta_stem(p, 1) > max_stem) break;
    for (long long i = 1; beta_stem(p, i) <= max_stem; ++i) {
      add(p, "alpha_" + std::to_string(i), alpha_stem(p, i),
          "beta_" + std::to_string(i), beta_stem(p, i), Relation::Equality,
          "MR93; Sad92");
    }
  }

  // M(alpha_i) = (-1)^(i+1) beta_i at p = 3 for i = 0, 1, 5 mod 9; the
  // sign lands in the target display name.
  for (long long i = 1; beta_stem(3, i) <= max_stem; ++i) {
    const long long r = i % 9;
    if (r != 0 && r != 1 && r != 5) continue;
    add(3, "alpha_" + std::to_string(i), alpha_stem(3, i),
        (i % 2 == 0 ? "-beta_" : "beta_") + std::to_string(i), beta_stem(3, i),
        Relation::Equality, "Beh06");
  }

  // beta_{p/2} in M(alpha_{p/2}) for p >= 5.
  for (long long p = 5;; p += 2) {
    if (!is_prime(p)) continue;
    if (beta_p_over_2_stem(p) > max_stem) break;
    add(p, "alpha_{" + std::to_string(p) + "/2}", alpha_p_over_2_stem(p),
        "beta_{" + std::to_string(p) + "/2}", beta_p_over_2_stem(p),
        Relation::Containment, "Sad92");
  }

  // Explicit p = 3 list.
  add(3, "alpha_2", 7, "beta_1^2 alpha_1", 23, Relation::UpToUnit, "Beh06");
  add(3, "alpha_{3/2}", 11, "-beta_{3/2}", 38, Relation::Equality, "Beh06");
  add(3, "alpha_3", 11, "beta_3", 42, Relation::Equality, "Beh06");
  add(3, "alpha_4", 15, "beta_1^5", 50, Relation::UpToUnit, "Beh06");
  add(3, "alpha_{6/2}", 23, "beta_{6/2}", 86, Relation::Equality, "Beh06");
  add(3, "alpha_6", 23, "-beta_6", 90, Relation::Equality, "Beh06");

  // Explicit p = 2 list.
  add(2, "eta^2", 2, "nu^2", 6, Relation::Equality, "Beh07");
  add(2, "eta^3", 3, "nu^3", 9, Relation::Equality, "Beh07");
  add(2, "2nu", 3, "sigma eta", 8, Relation::Equality, "Beh07");
  add(2, "sigma", 7, "sigma^2", 14, Relation::Equality, "Beh07");
  add(2, "2sigma", 7, "eta_4", 16, Relation::Equality, "Beh07");
  add(2, "4sigma", 7, "eta eta_4", 17, Relation::Equality, "Beh07");
  add(2, "8sigma", 7, "eta^2 eta_4", 18, Relation::Equality, "Beh07");
  add(2, "eta sigma", 8, "nu*", 18, Relation::Equality, "Beh07");
  add(2, "eta^2 sigma", 9, "nu nu*", 21, Relation::Equality, "Beh07",
      "the exotic 9-sphere corresponding to eta^2 sigma");
  add(2, "v1^4 eta", 9, "nu kappabar", 23, Relation::Equality, "Beh07");
  add(2, "v1^4 eta^2", 10, "kappa^2", 28, Relation::Equality, "Beh07");
  add(2, "v1^4 eta^3", 11, "eta q", 33, Relation::Equality, "Beh07");
  add(2, "v1^4 nu", 11, "nu^2 kappabar", 26, Relation::Equality, "Beh07");
  add(2, "v1^4 2nu", 11, "q", 32, Relation::Equality, "Beh07");

  auto key = [](const MahowaldEntry& e) {
    return std::tie(e.p, e.target_stem, e.source_stem, e.source_name,
                    e.target_name);
  };
  std::sort(entries.begin(), entries.end(),
            [&](const MahowaldEntry& a, const MahowaldEntry& b) {
              return key(a) < key(b);
            });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const MahowaldEntry& a, const MahowaldEntry& b) {
                              return a.p == b.p &&
                                     a.source_name == b.source_name &&
                                     a.target_name == b.target_name;
                            }),
                entries.end());
  return entries;
}

}  // namespace exosphere
