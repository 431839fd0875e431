// Command-line frontend: recompute bp orders and their prime factors,
// audit the published dimension tables, and apply the free-action and
// fixed-point criteria.

#include "exosphere/exosphere.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

namespace {

using exosphere::ActionConclusion;
using exosphere::ActionKind;
using exosphere::Annotation;
using exosphere::BpKind;
using exosphere::Decision;
using exosphere::FactorOptions;
using exosphere::Integer;
using exosphere::MahowaldEntry;
using exosphere::Relation;
using exosphere::TableFormat;
using exosphere::Verdict;
using nlohmann::json;

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Guaranteed:
      return "guaranteed";
    case Verdict::CriterionInapplicable:
      return "criterion inapplicable";
    case Verdict::NotGuaranteedByThisCriterion:
      return "not guaranteed by this criterion";
  }
  return "?";
}

json decision_json(const Decision& d) {
  json reasons = json::array();
  for (const auto& check : d.reasons)
    reasons.push_back({{"condition", check.condition},
                       {"passed", check.passed},
                       {"witness", check.witness}});
  return {{"verdict", verdict_text(d.verdict)}, {"reasons", reasons}};
}

void print_decision(const Decision& d) {
  std::cout << verdict_text(d.verdict) << '\n';
  for (const auto& check : d.reasons) {
    std::cout << "  [" << (check.passed ? "ok" : "fail") << "] "
              << check.condition;
    if (!check.witness.empty()) std::cout << " (" << check.witness << ")";
    std::cout << '\n';
  }
}

json factors_json(const exosphere::Factorization& f) {
  json arr = json::array();
  for (const auto& e : f.factors)
    arr.push_back({{"prime", e.prime.str()}, {"exponent", e.exponent}});
  return arr;
}

std::string brace_list(const std::vector<Integer>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "}";
}

json string_list(const std::vector<Integer>& values) {
  json arr = json::array();
  for (const Integer& v : values) arr.push_back(v.str());
  return arr;
}

FactorOptions factor_options_from_env() {
  FactorOptions opts;
  if (const char* s = std::getenv("EXOSPHERE_RHO_MAX_ITERS")) {
    try {
      opts.max_rho_iterations = std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "EXOSPHERE_RHO_MAX_ITERS must be a nonnegative integer");
    }
  }
  return opts;
}

int cmd_table(long long min_n, long long max_n, const std::string& format,
              bool as_json) {
  if (as_json) {
    json rows = json::array();
    for (const auto& r : exosphere::build_table_rows(min_n, max_n))
      rows.push_back({{"n", r.n},
                      {"cokerj", r.cokerj_cell},
                      {"bp", r.bp_cell},
                      {"notes", r.notes}});
    json omitted = json::array();
    for (long long n : exosphere::omitted_dimensions(min_n, max_n))
      omitted.push_back(n);
    json errata = json::array();
    for (const auto& d : exosphere::table_divergences(min_n, max_n))
      errata.push_back({{"n", d.n},
                        {"computed", string_list(d.computed)},
                        {"published", string_list(d.published)},
                        {"only_published", string_list(d.extra_in_published)},
                        {"only_computed",
                         string_list(d.missing_in_published)}});
    std::cout << json{{"rows", rows},
                      {"omitted", omitted},
                      {"errata", errata}}
                     .dump(2)
              << '\n';
    return 0;
  }
  TableFormat f = TableFormat::Text;
  if (format == "csv")
    f = TableFormat::Csv;
  else if (format == "markdown")
    f = TableFormat::Markdown;
  else if (format == "latex")
    f = TableFormat::Latex;
  std::cout << exosphere::emit_table(min_n, max_n, f);
  return 0;
}

int cmd_theta_bp(long long n, bool as_json) {
  const exosphere::ThetaBpGroup g = exosphere::theta_bp(n);
  if (as_json) {
    json j = {{"n", n}, {"uncertain", g.uncertain}};
    switch (g.kind) {
      case BpKind::Trivial:
        j["kind"] = "trivial";
        j["order"] = "1";
        break;
      case BpKind::OrderTwo:
        j["kind"] = "order-two";
        j["order"] = "2";
        break;
      case BpKind::Cyclic:
        j["kind"] = "cyclic";
        j["order"] = g.order.str();
        j["k"] = g.k;
        j["factors"] = factors_json(exosphere::factorize(g.order));
        break;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "Theta_" << n << "^bp = ";
  switch (g.kind) {
    case BpKind::Trivial:
      std::cout << "0";
      break;
    case BpKind::OrderTwo:
      std::cout << "Z/2";
      break;
    case BpKind::Cyclic:
      std::cout << "Z/" << g.order << " = Z/("
                << exosphere::factorize(g.order).to_string() << ")";
      break;
  }
  if (g.uncertain) std::cout << "  (triviality is an open question)";
  std::cout << '\n';
  return 0;
}

int cmd_theta(long long n, bool as_json) {
  const exosphere::ThetaFactorSet f = exosphere::theta_prime_factors(n);
  if (as_json) {
    std::cout << json{{"n", n},
                      {"theta_trivial", f.theta_trivial},
                      {"kervaire_killed_two", f.kervaire_killed_two},
                      {"bp_primes", string_list(f.bp_primes)},
                      {"cokerj_primes", string_list(f.cokerj_primes)},
                      {"possible_primes", string_list(f.possible_primes())}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << brace_list(f.possible_primes()) << '\n';
  return 0;
}

int cmd_free_action(long long n, long long p, bool as_json) {
  const Decision order = exosphere::free_action_by_order(n, p);
  const bool odd_p = p % 2 == 1 && p > 2;
  json criteria = json::array();

  if (as_json) {
    json jo = decision_json(order);
    jo["name"] = "order";
    criteria.push_back(jo);
  } else {
    std::cout << "order criterion: ";
    print_decision(order);
  }

  if (odd_p && n >= 5) {
    const Decision little = exosphere::little_criterion(n, p);
    if (as_json) {
      json jl = decision_json(little);
      jl["name"] = "dimension";
      criteria.push_back(jl);
    } else {
      std::cout << "dimension criterion: ";
      print_decision(little);
    }
    const Decision funny = exosphere::funny_criterion(n, p);
    if (as_json) {
      json jf = decision_json(funny);
      jf["name"] = "regularity";
      criteria.push_back(jf);
    } else {
      std::cout << "regularity criterion: ";
      print_decision(funny);
      std::cout << "  note: the dimension bound in this criterion is "
                   "imposed conservatively; the published statement "
                   "omits it\n";
    }
  } else {
    const std::string why =
        odd_p ? "requires n >= 5" : "requires an odd prime";
    if (as_json) {
      criteria.push_back({{"name", "dimension"}, {"skipped", why}});
      criteria.push_back({{"name", "regularity"}, {"skipped", why}});
    } else {
      std::cout << "dimension criterion: skipped (" << why << ")\n";
      std::cout << "regularity criterion: skipped (" << why << ")\n";
    }
  }

  if (as_json)
    std::cout << json{{"n", n}, {"p", p}, {"criteria", criteria}}.dump(2)
              << '\n';
  return 0;
}

int cmd_actions(long long n, bool as_json) {
  json conclusions = json::array();
  json no_conclusion = json::array();
  bool any = false;
  for (const MahowaldEntry& e : exosphere::mahowald_registry()) {
    if (e.target_stem != n) continue;
    const ActionConclusion c = exosphere::classify_schultz_stolz(e);
    if (c.kind == ActionKind::NoConclusion) {
      if (as_json) {
        no_conclusion.push_back({{"p", e.p},
                                 {"source", e.source_name},
                                 {"target", e.target_name},
                                 {"failed_conditions", c.failed_conditions}});
      } else {
        std::cout << "no conclusion from M(" << e.source_name << ") = "
                  << e.target_name << ":\n";
        for (const auto& f : c.failed_conditions)
          std::cout << "    " << f << '\n';
      }
      continue;
    }
    any = true;
    if (as_json) {
      json jc = {{"p", c.p},
                 {"source", c.source_name},
                 {"source_stem", c.source_stem},
                 {"target", c.target_name},
                 {"target_stem", c.target_stem},
                 {"fixed_set", c.fixed_set},
                 {"fixed_dim", c.fixed_dim},
                 {"bp_ambiguity", c.bp_ambiguity},
                 {"citation", e.citation}};
      switch (c.kind) {
        case ActionKind::ZpAction:
          jc["kind"] = "zp-action";
          break;
        case ActionKind::CircleAction:
          jc["kind"] = "circle-action";
          break;
        case ActionKind::Involution:
          jc["kind"] = "involution";
          break;
        case ActionKind::NoConclusion:
          break;
      }
      conclusions.push_back(jc);
      continue;
    }
    switch (c.kind) {
      case ActionKind::ZpAction:
        std::cout << "Z/" << c.p << "-action with fixed point set "
                  << c.fixed_set;
        break;
      case ActionKind::CircleAction:
        std::cout << "circle action with " << c.fixed_dim
                  << "-dimensional fixed point set";
        break;
      case ActionKind::Involution:
        std::cout << "involution with fixed point set " << c.fixed_set
                  << " (up to a bp summand on the acted-on sphere)";
        break;
      case ActionKind::NoConclusion:
        break;
    }
    std::cout << "  [M(" << c.source_name << ") ~ " << c.target_name
              << ", stems " << c.source_stem << " -> " << c.target_stem
              << ", " << e.citation << "]\n";
  }
  if (as_json) {
    std::cout << json{{"n", n},
                      {"conclusions", conclusions},
                      {"no_conclusion", no_conclusion}}
                     .dump(2)
              << '\n';
  } else if (!any) {
    std::cout << "no action conclusions for dimension " << n << '\n';
  }
  return 0;
}

int cmd_mahowald(long long max_stem, bool as_json) {
  const auto reg = exosphere::mahowald_registry(max_stem);
  if (as_json) {
    json arr = json::array();
    for (const MahowaldEntry& e : reg) {
      std::string rel = "equality";
      if (e.relation == Relation::UpToUnit) rel = "up-to-unit";
      if (e.relation == Relation::Containment) rel = "containment";
      arr.push_back({{"p", e.p},
                     {"source", e.source_name},
                     {"source_stem", e.source_stem},
                     {"target", e.target_name},
                     {"target_stem", e.target_stem},
                     {"relation", rel},
                     {"citation", e.citation},
                     {"source_sphere", e.source_sphere}});
    }
    std::cout << json{{"max_stem", max_stem}, {"entries", arr}}.dump(2)
              << '\n';
    return 0;
  }
  for (const MahowaldEntry& e : reg) {
    std::cout << "p=" << e.p << "  M(" << e.source_name << ") ";
    switch (e.relation) {
      case Relation::Equality:
        std::cout << "= " << e.target_name;
        break;
      case Relation::UpToUnit:
        std::cout << "= " << e.target_name << " up to unit";
        break;
      case Relation::Containment:
        std::cout << "contains " << e.target_name;
        break;
    }
    std::cout << "  (stems " << e.source_stem << " -> " << e.target_stem
              << ")  [" << e.citation << "]\n";
  }
  return 0;
}

int cmd_bernoulli(long long m, long long quotient, bool as_json) {
  const exosphere::Rational b = exosphere::bernoulli(m);
  const Integer num = exosphere::numerator_of(b);
  const Integer den = exosphere::denominator_of(b);
  if (as_json) {
    json j = {{"m", m}, {"numerator", num.str()}, {"denominator", den.str()}};
    if (quotient > 0) {
      j["quotient_divisor"] = quotient;
      j["quotient_numerator"] =
          exosphere::num_bernoulli_quotient(m / 2, quotient).str();
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "B_" << m << " = " << num << "/" << den << '\n';
  if (quotient > 0)
    std::cout << "num(B_" << m << "/" << quotient
              << ") = " << exosphere::num_bernoulli_quotient(m / 2, quotient)
              << '\n';
  return 0;
}

int cmd_factor(const std::string& digits, bool as_json) {
  static const std::regex number("[0-9]+");
  if (!std::regex_match(digits, number)) {
    std::cerr << "error: factor expects a positive integer\n";
    return 2;
  }
  const Integer value(digits);
  const exosphere::Factorization f =
      exosphere::factorize(value, factor_options_from_env());
  if (as_json) {
    std::cout << json{{"value", value.str()}, {"factors", factors_json(f)}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << value << " = " << f.to_string() << '\n';
  return 0;
}

int cmd_regular(long long p, bool as_json) {
  try {
    const exosphere::IrregularityReport report =
        exosphere::irregularity_report(p);
    if (as_json) {
      std::cout << json{{"p", p},
                        {"regular", report.regular()},
                        {"exhaustive", true},
                        {"irregular_indices", report.irregular_indices}}
                       .dump(2)
                << '\n';
      return 0;
    }
    if (report.regular()) {
      std::cout << p << " is regular\n";
    } else {
      std::cout << p << " is irregular (divides num(B_j) for j =";
      for (long long j : report.irregular_indices) std::cout << ' ' << j;
      std::cout << ")\n";
    }
    return 0;
  } catch (const exosphere::CutoffExceededError&) {
    // too large for the exhaustive scan; fall back to the witness search
    const bool regular = exosphere::is_regular(p);
    if (as_json) {
      std::cout << json{{"p", p},
                        {"regular", regular},
                        {"exhaustive", false}}
                       .dump(2)
                << '\n';
      return 0;
    }
    std::cout << p << " is " << (regular ? "regular" : "irregular")
              << " (witness scan, not exhaustive)\n";
    return 0;
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "exosphere: exact orders, prime factors and symmetries of exotic "
      "spheres"};
  app.require_subcommand(1);
  bool as_json = false;

  long long table_min = 7, table_max = 100;
  std::string table_format = "text";
  auto* table = app.add_subcommand(
      "table", "render the dimension table (coker J and bp prime factors)");
  table->add_option("min", table_min, "first dimension");
  table->add_option("max", table_max, "last dimension");
  table->add_option("--format", table_format, "text, csv, markdown or latex")
      ->check(CLI::IsMember({"text", "csv", "markdown", "latex"}));
  table->add_flag("--json", as_json, "emit JSON");

  long long n_theta_bp = 0;
  auto* theta_bp = app.add_subcommand(
      "theta-bp", "order of the bp subgroup in dimension n");
  theta_bp->add_option("n", n_theta_bp, "dimension")->required();
  theta_bp->add_flag("--json", as_json, "emit JSON");

  long long n_theta = 0;
  auto* theta = app.add_subcommand(
      "theta", "primes that can divide the order of an exotic n-sphere");
  theta->add_option("n", n_theta, "dimension")->required();
  theta->add_flag("--json", as_json, "emit JSON");

  long long n_free = 0, p_free = 0;
  auto* free_action = app.add_subcommand(
      "free-action", "criteria for free Z/p-actions on exotic n-spheres");
  free_action->add_option("n", n_free, "dimension")->required();
  free_action->add_option("p", p_free, "prime")->required();
  free_action->add_flag("--json", as_json, "emit JSON");

  long long n_actions = 0;
  auto* actions = app.add_subcommand(
      "actions", "published circle, Z/p and involution conclusions in "
      "dimension n");
  actions->add_option("n", n_actions, "dimension")->required();
  actions->add_flag("--json", as_json, "emit JSON");

  long long max_stem = 100;
  auto* mahowald =
      app.add_subcommand("mahowald", "list the published invariants");
  mahowald->add_option("--max-stem", max_stem, "target stem ceiling");
  mahowald->add_flag("--json", as_json, "emit JSON");

  long long bern_m = 0, bern_quotient = 0;
  auto* bernoulli =
      app.add_subcommand("bernoulli", "exact Bernoulli number B_m");
  bernoulli->add_option("m", bern_m, "even index >= 2")->required();
  bernoulli->add_option("--quotient", bern_quotient,
                        "also print num(B_m/d) for this d");
  bernoulli->add_flag("--json", as_json, "emit JSON");

  std::string factor_value;
  auto* factor =
      app.add_subcommand("factor", "prime factorization of an integer");
  factor->add_option("value", factor_value, "positive integer")->required();
  factor->add_flag("--json", as_json, "emit JSON");

  long long reg_p = 0;
  auto* regular =
      app.add_subcommand("regular", "regularity of an odd prime");
  regular->add_option("p", reg_p, "odd prime")->required();
  regular->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed())
      return cmd_table(table_min, table_max, table_format, as_json);
    if (theta_bp->parsed()) return cmd_theta_bp(n_theta_bp, as_json);
    if (theta->parsed()) return cmd_theta(n_theta, as_json);
    if (free_action->parsed())
      return cmd_free_action(n_free, p_free, as_json);
    if (actions->parsed()) return cmd_actions(n_actions, as_json);
    if (mahowald->parsed()) return cmd_mahowald(max_stem, as_json);
    if (bernoulli->parsed())
      return cmd_bernoulli(bern_m, bern_quotient, as_json);
    if (factor->parsed()) return cmd_factor(factor_value, as_json);
    if (regular->parsed()) return cmd_regular(reg_p, as_json);
  } catch (const exosphere::FactorizationIncompleteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const exosphere::DataUnavailableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const exosphere::CutoffExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;  // no subcommand matched; require_subcommand should prevent this
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
