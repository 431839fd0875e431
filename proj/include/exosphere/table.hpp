#pragma once

#include "exosphere/actions.hpp"
#include "exosphere/bernoulli.hpp"
#include "exosphere/integer.hpp"
#include "exosphere/kervaire_milnor.hpp"
#include "exosphere/numtheory.hpp"
#include "exosphere/stem_data.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace exosphere {

enum class TableFormat { Text, Csv, Markdown, Latex };

/// One rendered table row. Cell tokens are canonical: ascending primes,
/// annotations as trailing `*` / `**`, errata flagged in notes.
struct TableRow {
  long long n = 0;
  std::vector<std::string> cokerj_cell;
  std::vector<std::string> bp_cell;
  std::vector<std::string> notes;
};

/// Where a recomputed bp prime set disagrees with the published cell
/// (published tokens normalized: placeholders expanded, composites
/// factored, duplicates removed).
struct RowDivergence {
  long long n = 0;
  std::vector<Integer> computed;
  std::vector<Integer> published;
  std::vector<Integer> extra_in_published;
  std::vector<Integer> missing_in_published;
};

namespace detail {

/// Published bp tokens as a prime set. Placeholder tokens `num(B_j/j)`
/// expand through the Bernoulli quotient; everything is factored, so a
/// composite token contributes its prime divisors.
inline std::vector<Integer> normalized_published_bp(long long n) {
  std::set<Integer> out;
  for (const std::string& tok : published_bp_tokens(n)) {
    Integer value;
    if (tok.rfind("num(B_", 0) == 0) {
      const auto slash = tok.find('/');
      const long long j = std::stoll(tok.substr(6, slash - 6));
      value = num_bernoulli_quotient(j / 2, j);
    } else {
      value = Integer(tok);
    }
    for (const Integer& p : factorize(value).primes()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

inline void require_table_range(long long min_n, long long max_n,
                                const char* who) {
  if (min_n < 1 || min_n > max_n)
    throw std::invalid_argument(std::string(who) +
                                ": need 1 <= min <= max");
  if (max_n > 100)
    throw DataUnavailableError(std::string(who) +
                               ": no tabulated data above dimension 100");
}

}  // namespace detail

inline RowDivergence bp_divergence(long long n) {
  RowDivergence d;
  d.n = n;
  d.computed = theta_bp_prime_factors(n);
  d.published = detail::normalized_published_bp(n);
  std::set_difference(d.published.begin(), d.published.end(),
                      d.computed.begin(), d.computed.end(),
                      std::back_inserter(d.extra_in_published));
  std::set_difference(d.computed.begin(), d.computed.end(),
                      d.published.begin(), d.published.end(),
                      std::back_inserter(d.missing_in_published));
  return d;
}

/// Rows with any bp disagreement against the published cells, ascending.
inline std::vector<RowDivergence> table_divergences(long long min_n = 7,
                                                    long long max_n = 100) {
  detail::require_table_range(min_n, max_n, "table_divergences");
  std::vector<RowDivergence> out;
  for (long long n = min_n; n <= max_n; ++n) {
    if (n < 7 || coker_j_row(n).theta_trivial) continue;
    RowDivergence d = bp_divergence(n);
    if (!d.extra_in_published.empty() || !d.missing_in_published.empty())
      out.push_back(std::move(d));
  }
  return out;
}

/// Dimensions in range omitted from the table body: the trivial groups
/// plus anything below the tabulated range.
inline std::vector<long long> omitted_dimensions(long long min_n,
                                                 long long max_n) {
  detail::require_table_range(min_n, max_n, "omitted_dimensions");
  std::vector<long long> out;
  for (long long n = min_n; n <= max_n; ++n) {
    const CokerJRow row = coker_j_row(n);
    if (row.no_data || row.theta_trivial) out.push_back(n);
  }
  return out;
}

inline std::vector<TableRow> build_table_rows(long long min_n,
                                              long long max_n) {
  detail::require_table_range(min_n, max_n, "build_table_rows");
  const auto stars = asterisk_annotations(100);
  std::vector<TableRow> rows;
  for (long long n = min_n; n <= max_n; ++n) {
    const CokerJRow source = coker_j_row(n);
    if (source.no_data || source.theta_trivial) continue;
    TableRow row;
    row.n = n;
    for (const AnnotatedPrime& ap : source.primes) {
      std::string tok = ap.prime.str();
      const long long p = ap.prime.convert_to<long long>();
      if (n == 30 && p == 2)
        tok += "**";  // Kervaire-invariant-one annotation from the dataset
      else if (stars.count({n, p}))
        tok += "*";
      row.cokerj_cell.push_back(std::move(tok));
    }
    for (const Integer& p : theta_bp_prime_factors(n))
      row.bp_cell.push_back(p.str());
    const RowDivergence d = bp_divergence(n);
    if (!d.extra_in_published.empty() || !d.missing_in_published.empty())
      row.notes.push_back("[!paper]");
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline std::string join(const std::vector<std::string>& toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ", ";
    out += toks[i];
  }
  return out;
}

inline std::string join_integers(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void append_footnotes(std::ostringstream& os,
                             const std::vector<long long>& omitted,
                             const std::vector<RowDivergence>& divergences,
                             bool latex) {
  if (!omitted.empty()) {
    std::vector<long long> trivial, below;
    for (long long n : omitted) (n < 7 ? below : trivial).push_back(n);
    if (!trivial.empty()) {
      os << (latex ? "% " : "") << "omitted trivial groups:";
      for (long long n : trivial)
        os << ' ' << (latex ? "$\\Theta_{" + std::to_string(n) + "}$"
                            : "Theta_" + std::to_string(n));
      os << '\n';
    }
    if (!below.empty()) {
      os << (latex ? "% " : "")
         << "omitted dimensions below 7 (no exotic spheres):";
      for (long long n : below) os << ' ' << n;
      os << '\n';
    }
  }
  if (!divergences.empty()) {
    os << (latex ? "% " : "") << "[!paper] ledger:\n";
    for (const RowDivergence& d : divergences) {
      os << (latex ? "% " : "") << "  n=" << d.n << ": computed {"
         << join_integers(d.computed) << "}; published {"
         << join_integers(d.published) << "}";
      if (!d.extra_in_published.empty())
        os << "; only published: {" << join_integers(d.extra_in_published)
           << "}";
      if (!d.missing_in_published.empty())
        os << "; only computed: {" << join_integers(d.missing_in_published)
           << "}";
      os << '\n';
    }
  }
}

}  // namespace detail

/// Renders the dimension table. Body rows cover every dimension in range
/// with a nontrivial group; trivial and below-range dimensions are
/// footnoted. Output is byte-deterministic per (range, format).
inline std::string emit_table(long long min_n, long long max_n,
                              TableFormat format) {
  const std::vector<TableRow> rows = build_table_rows(min_n, max_n);
  const std::vector<long long> omitted = omitted_dimensions(min_n, max_n);
  const std::vector<RowDivergence> divergences =
      table_divergences(min_n, max_n);
  std::ostringstream os;
  switch (format) {
    case TableFormat::Text: {
      os << "n | coker J | bp | notes\n";
      for (const TableRow& r : rows)
        os << r.n << " | " << detail::join(r.cokerj_cell) << " | "
           << detail::join(r.bp_cell) << " | " << detail::join(r.notes)
           << '\n';
      os << '\n';
      detail::append_footnotes(os, omitted, divergences, false);
      break;
    }
    case TableFormat::Csv: {
      os << "n,cokerJ,bp,notes\r\n";
      for (const TableRow& r : rows)
        os << r.n << ',' << detail::csv_field(detail::join(r.cokerj_cell))
           << ',' << detail::csv_field(detail::join(r.bp_cell)) << ','
           << detail::csv_field(detail::join(r.notes)) << "\r\n";
      break;
    }
    case TableFormat::Markdown: {
      os << "| n | coker J | bp | notes |\n";
      os << "| --- | --- | --- | --- |\n";
      for (const TableRow& r : rows)
        os << "| " << r.n << " | " << detail::join(r.cokerj_cell) << " | "
           << detail::join(r.bp_cell) << " | " << detail::join(r.notes)
           << " |\n";
      os << '\n';
      detail::append_footnotes(os, omitted, divergences, false);
      break;
    }
    case TableFormat::Latex: {
      os << "\\begin{tabular}{rlll}\n";
      os << "$n$ & $\\operatorname{coker} J$ & $bp$ & notes \\\\\n";
      os << "\\hline\n";
      for (const TableRow& r : rows)
        os << r.n << " & " << detail::join(r.cokerj_cell) << " & "
           << detail::join(r.bp_cell) << " & " << detail::join(r.notes)
           << " \\\\\n";
      os << "\\end{tabular}\n";
      detail::append_footnotes(os, omitted, divergences, true);
      break;
    }
  }
  return os.str();
}

}  // namespace exosphere
