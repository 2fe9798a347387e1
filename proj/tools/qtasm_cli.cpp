#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtasm/altsign/asm.hpp"
#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"
#include "qtasm/ice/partition.hpp"
#include "qtasm/identities/suite.hpp"

namespace {

using namespace qtasm;
using exact::CycQ6;
using exact::Rational;
using nlohmann::ordered_json;

enum Exit { kPass = 0, kIdentityFailure = 1, kUsage = 2, kBudget = 3, kSingular = 4 };

struct Common {
  std::string format = "text";
  std::string out;
  unsigned threads = 0;
  std::uint64_t max_states = ice::kDefaultMaxStates;
  std::size_t max_terms = 200000;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(c.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ContractError("cannot write " + tmp.string());
    f << text;
  }
  std::filesystem::rename(tmp, target);
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  std::string cls = "all";
  int order = 0;
  bool count_only = false;
  bool list = false;
  std::string strategy = "backtracking";
};

altsign::SearchStrategy parse_strategy(const std::string& s) {
  if (s == "backtracking") return altsign::SearchStrategy::Backtracking;
  if (s == "filter") return altsign::SearchStrategy::Filter;
  if (s == "triangle") return altsign::SearchStrategy::MonotoneTriangle;
  throw ContractError("unknown strategy '" + s + "' (expected backtracking, filter, triangle)");
}

int cmd_enumerate(const Common& c, const EnumerateArgs& e) {
  const auto cls = altsign::parse_symmetry_class(e.cls);
  const auto strategy = parse_strategy(e.strategy);
  std::vector<std::string> rows;
  std::uint64_t n = 0;
  if (e.list && !e.count_only) {
    for (const auto& m : altsign::enumerate(e.order, cls, strategy)) rows.push_back(m.compact());
    n = rows.size();
  } else {
    n = altsign::count(e.order, cls, strategy);
  }
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    j["class"] = std::string(altsign::to_string(cls));
    j["order"] = e.order;
    j["count"] = n;
    if (!rows.empty() || e.list) j["matrices"] = rows;
    os << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "class,order,count\n" << altsign::to_string(cls) << ',' << e.order << ',' << n << '\n';
    for (const auto& r : rows) os << r << '\n';
  } else {
    os << n << '\n';
    for (const auto& r : rows) os << r << '\n';
  }
  emit(c, os.str());
  return kPass;
}

// ---- pf ------------------------------------------------------------------

struct PfArgs {
  std::string pattern;
  int order = 0;
  bool symbolic = false;
  std::string a;
  std::string x;
  std::string y;
};

std::vector<Rational> point_for(const ice::IceGraph& g, const PfArgs& p) {
  std::vector<Rational> xs = parse_list(p.x);
  const std::vector<Rational> ys = p.y.empty() ? std::vector<Rational>{} : parse_list(p.y);
  xs.insert(xs.end(), ys.begin(), ys.end());
  if (xs.size() != g.variables().size()) {
    std::string names;
    for (const auto& v : g.variables()) names += (names.empty() ? "" : ",") + v;
    throw ContractError("pattern needs values for " + names + " (" + std::to_string(g.variables().size()) +
                        " total across --x and --y), got " + std::to_string(xs.size()));
  }
  return xs;
}

int cmd_pf(const Common& c, const PfArgs& p) {
  auto graph = ice::build_pattern(ice::parse_pattern(p.pattern), p.order);
  const ice::StateSum sum(graph, ice::WeightRule::calibrated(), c.max_states);
  std::string value;
  std::string domain;
  if (p.symbolic) {
    if (!p.a.empty() || !p.x.empty()) throw ContractError("--symbolic excludes --a/--x/--y");
    value = sum.symbolic(ice::EvaluationBudget{c.max_terms}).str();
    domain = "symbolic";
  } else {
    if (p.a.empty()) throw ContractError("give --a (p/q or zeta) or --symbolic");
    const auto xs = point_for(sum.graph(), p);
    if (p.a == "zeta") {
      std::vector<CycQ6> lifted(xs.begin(), xs.end());
      value = sum.evaluate<CycQ6>(CycQ6::zeta(), lifted).str();
      domain = "cyclotomic";
    } else {
      value = sum.evaluate<Rational>(Rational::parse(p.a), xs).str();
      domain = "rational";
    }
  }
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    j["pattern"] = p.pattern;
    j["order"] = p.order;
    j["states"] = sum.state_count();
    j["domain"] = domain;
    j["value"] = value;
    os << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::string flat = value;
    std::replace(flat.begin(), flat.end(), '\n', ';');
    os << "pattern,order,states,domain,value\n"
       << p.pattern << ',' << p.order << ',' << sum.state_count() << ',' << domain << ",\"" << flat << "\"\n";
  } else {
    os << value << '\n';
  }
  emit(c, os.str());
  return kPass;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string identity = "all";
  std::uint64_t seed = 42;
  int points = 20;
  bool extended = false;
};

int cmd_verify(const Common& c, const VerifyArgs& v) {
  if (v.identity != "all" && !identities::in_catalog(v.identity)) {
    std::string names;
    for (const auto& e : identities::catalog()) names += "\n  " + e.name + "  " + e.summary;
    throw ContractError("unknown identity '" + v.identity + "'; catalog:\n  all" + names);
  }
  identities::SuiteOptions opts;
  opts.seed = v.seed;
  opts.points = v.points;
  opts.extended = v.extended;
  opts.threads = c.threads;
  opts.max_states = c.max_states;
  const identities::Suite suite(opts);
  const auto reports = suite.run(v.identity);
  std::ostringstream os;
  if (c.format == "json") {
    os << identities::to_json(reports).dump(2) << '\n';
  } else if (c.format == "csv") {
    os << identities::csv_header() << '\n';
    for (const auto& r : reports) os << identities::to_csv(r) << '\n';
  } else {
    int failed = 0;
    for (const auto& r : reports) {
      os << identities::to_text(r) << '\n';
      failed += r.passed ? 0 : 1;
    }
    os << reports.size() - static_cast<std::size_t>(failed) << '/' << reports.size() << " checks passed\n";
  }
  emit(c, os.str());
  return identities::all_passed(reports) ? kPass : kIdentityFailure;
}

// ---- counts --------------------------------------------------------------

int cmd_counts(const Common& c, int max_order) {
  using altsign::SymmetryClass;
  ordered_json arr = ordered_json::array();
  std::ostringstream os;
  if (c.format == "csv") os << "class,order,count\n";
  for (auto cls : {SymmetryClass::All, SymmetryClass::HalfTurn, SymmetryClass::QuarterTurn}) {
    const altsign::SearchBounds bounds;
    const int limit = std::min(max_order, cls == SymmetryClass::All         ? bounds.max_order_all
                                          : cls == SymmetryClass::HalfTurn ? bounds.max_order_half_turn
                                                                           : bounds.max_order_quarter_turn);
    for (int n = 1; n <= limit; ++n) {
      if (cls == SymmetryClass::QuarterTurn && n % 2 == 0 && n % 4 != 0) continue;
      const auto k = altsign::count(n, cls);
      const std::string name(altsign::to_string(cls));
      if (c.format == "json") {
        arr.push_back({{"class", name}, {"order", n}, {"count", k}});
      } else if (c.format == "csv") {
        os << name << ',' << n << ',' << k << '\n';
      } else {
        os << name << ' ' << n << ' ' << k << '\n';
      }
    }
  }
  if (c.format == "json") os << arr.dump(2) << '\n';
  emit(c, os.str());
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating-sign matrices, square-ice partition functions and their exact identities"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "Write output to this file (atomically) instead of stdout");
  app.add_option("--threads", common.threads, "Worker threads for the identity suite (0 = all cores)");
  app.add_option("--max-states", common.max_states, "Budget: maximum ice states per pattern")->capture_default_str();
  app.add_option("--max-terms", common.max_terms, "Budget: maximum terms of a symbolic result")->capture_default_str();

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Count or list alternating-sign matrices of a symmetry class");
  enumerate->add_option("--class", en.cls, "all, ht or qt")->capture_default_str();
  enumerate->add_option("--order", en.order, "Matrix order")->required();
  enumerate->add_flag("--count", en.count_only, "Print only the count");
  enumerate->add_flag("--list", en.list, "Also print every matrix in compact form");
  enumerate->add_option("--strategy", en.strategy, "backtracking, filter or triangle")->capture_default_str();

  PfArgs pf;
  auto* pfc = app.add_subcommand("pf", "Evaluate a square-ice partition function exactly");
  pfc->add_option("--pattern", pf.pattern, "dwbc, qt-even, qt-odd or ht-odd")->required();
  pfc->add_option("--order", pf.order, "Order of the matrices")->required();
  pfc->add_flag("--symbolic", pf.symbolic, "Laurent polynomial in a and the spectral parameters");
  pfc->add_option("--a", pf.a, "Value of a: p/q or zeta");
  pfc->add_option("--x", pf.x, "Comma-separated x values (p/q)");
  pfc->add_option("--y", pf.y, "Comma-separated y values (p/q)");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run identity checks at seeded random exact points");
  verify->add_option("--identity", vf.identity, "Catalog name or all")->capture_default_str();
  verify->add_option("--seed", vf.seed, "Seed for all random draws")->capture_default_str();
  verify->add_option("--points", vf.points, "Random points per check")->capture_default_str();
  verify->add_flag("--extended", vf.extended, "Include the order 8 and 9 instances");

  int max_order = 9;
  auto* counts = app.add_subcommand("counts", "Table of matrix counts for every class");
  counts->add_option("--max-order", max_order, "Largest order")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(common, en);
    if (*pfc) return cmd_pf(common, pf);
    if (*verify) return cmd_verify(common, vf);
    if (*counts) return cmd_counts(common, max_order);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "singular point: " << e.what() << '\n';
    return kSingular;
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
