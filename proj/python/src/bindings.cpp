#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qtasm/altsign/asm.hpp"
#include "qtasm/exact/field.hpp"
#include "qtasm/ice/partition.hpp"
#include "qtasm/identities/suite.hpp"
#include "qtasm/pfaffian/pfaffian.hpp"

namespace py = pybind11;
using namespace qtasm;
using exact::CycQ6;
using exact::Rational;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(Rational::parse(v));
  return out;
}

std::string partition_function(const std::string& pattern, int order, const std::string& a,
                               const std::vector<std::string>& vars, std::uint64_t max_states,
                               std::size_t max_terms) {
  const ice::StateSum sum(ice::build_pattern(ice::parse_pattern(pattern), order), ice::WeightRule::calibrated(),
                          max_states);
  if (a == "symbolic") {
    if (!vars.empty()) throw ContractError("symbolic evaluation takes no variable values");
    return sum.symbolic(ice::EvaluationBudget{max_terms}).str();
  }
  const auto xs = parse_all(vars);
  if (xs.size() != sum.variable_count()) {
    throw ContractError("pattern needs " + std::to_string(sum.variable_count()) + " variable values, got " +
                        std::to_string(xs.size()));
  }
  if (a == "zeta") return sum.evaluate<CycQ6>(CycQ6::zeta(), std::vector<CycQ6>(xs.begin(), xs.end())).str();
  return sum.evaluate<Rational>(Rational::parse(a), xs).str();
}

std::string pfaffian_of(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  pfaffian::Matrix<Rational> m(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ContractError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational::parse(rows[i][j]);
  }
  return pfaffian::pfaffian(pfaffian::SkewMatrix<Rational>(std::move(m))).str();
}

std::string verify(const std::string& identity, std::uint64_t seed, int points, bool extended, unsigned threads) {
  identities::SuiteOptions o;
  o.seed = seed;
  o.points = points;
  o.extended = extended;
  o.threads = threads;
  const identities::Suite suite(o);
  const auto reports = identity == "all" ? suite.run_all() : suite.run(identity);
  return identities::to_json(reports).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact alternating-sign matrix counts, square-ice partition functions and identity checks";

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "count",
      [](int n, const std::string& cls) { return altsign::count(n, altsign::parse_symmetry_class(cls)); },
      py::arg("order"), py::arg("cls") = "all");
  m.def(
      "enumerate",
      [](int n, const std::string& cls) {
        std::vector<std::string> out;
        for (const auto& a : altsign::enumerate(n, altsign::parse_symmetry_class(cls))) out.push_back(a.compact());
        return out;
      },
      py::arg("order"), py::arg("cls") = "all");
  m.def("partition_function", &partition_function, py::arg("pattern"), py::arg("order"), py::arg("a"),
        py::arg("vars") = std::vector<std::string>{}, py::arg("max_states") = ice::kDefaultMaxStates,
        py::arg("max_terms") = 200000);
  m.def(
      "state_count",
      [](const std::string& pattern, int order) {
        return ice::count_states(ice::build_pattern(ice::parse_pattern(pattern), order));
      },
      py::arg("pattern"), py::arg("order"));
  m.def("pfaffian", &pfaffian_of, py::arg("rows"));
  m.def("verify", &verify, py::arg("identity") = "all", py::arg("seed") = 42, py::arg("points") = 20,
        py::arg("extended") = false, py::arg("threads") = 0);
  m.def(
      "catalog",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : identities::catalog()) out.emplace_back(e.name, e.summary);
        return out;
      });
  m.def("sigma", [](const std::string& x) { return exact::sigma(Rational::parse(x)).str(); }, py::arg("x"));
  m.def(
      "alpha", [](const std::string& u, const std::string& a) {
        return exact::alpha(Rational::parse(u), Rational::parse(a)).str();
      },
      py::arg("u"), py::arg("a"));
}
