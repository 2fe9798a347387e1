#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"
#include "qtasm/ice/graph.hpp"
#include "qtasm/ice/states.hpp"

namespace qtasm::ice {

/// Weight attached to one of the six tetravalent configurations. `label` is
/// the spectral label in the corner between the two in-edges, read from the
/// corner-0 label for the fully-through configurations 0 and 1.
enum class WeightKind : std::uint8_t { SigmaA2, SigmaALabel, SigmaALabelInverse };

struct WeightRule {
  std::array<WeightKind, 6> by_configuration{};

  /// Fully-through configurations carry sigma(a^2); the four turning
  /// configurations carry sigma(a * label). This is the assignment that
  /// satisfies the Yang-Baxter relation with x y z = a.
  static WeightRule calibrated();
  /// Turning configurations carry sigma(a / label) instead.
  static WeightRule mirrored();

  bool operator==(const WeightRule&) const = default;
  [[nodiscard]] std::string str() const;
};

/// Work caps for symbolic evaluation; zero means unlimited.
struct EvaluationBudget {
  std::size_t max_terms = 0;
};

/// Enumerated states of a graph together with the per-vertex weight choice
/// of every state, so repeated evaluation only multiplies table entries.
class StateSum {
 public:
  explicit StateSum(IceGraph graph, WeightRule rule = WeightRule::calibrated(),
                    std::uint64_t max_states = kDefaultMaxStates);

  [[nodiscard]] const IceGraph& graph() const { return graph_; }
  [[nodiscard]] const WeightRule& rule() const { return rule_; }
  [[nodiscard]] std::size_t state_count() const { return choices_.size(); }
  [[nodiscard]] std::size_t variable_count() const { return graph_.variables().size(); }

  /// Sum over states of the product of vertex weights; `vars` follows
  /// graph().variables(). Bivalent vertices have weight 1.
  template <exact::CoefficientDomain T>
  [[nodiscard]] T evaluate(const T& a, std::span<const T> vars, EvaluationBudget budget = {}) const;

  template <exact::CoefficientDomain T>
  [[nodiscard]] T evaluate(const T& a, const std::vector<T>& vars, EvaluationBudget budget = {}) const {
    return evaluate<T>(a, std::span<const T>(vars), budget);
  }

  /// Symbolic partition function in the variables (a, graph variables...).
  [[nodiscard]] exact::SymbolicPoly symbolic(EvaluationBudget budget = {}) const;

 private:
  // choice per tetravalent vertex: 0 sigma(a^2), 1 sigma(a u), 2 sigma(a / u)
  // with u the corner-0 label
  IceGraph graph_;
  WeightRule rule_;
  std::vector<int> tetravalent_;
  std::vector<std::vector<std::uint8_t>> choices_;
};

namespace detail {

template <class T>
void check_term_budget(const T& value, const EvaluationBudget& budget) {
  if constexpr (requires { value.size(); }) {
    if (budget.max_terms != 0 && value.size() > budget.max_terms) {
      throw BudgetExceeded("symbolic evaluation exceeded max_terms = " + std::to_string(budget.max_terms));
    }
  }
}

}  // namespace detail

template <exact::CoefficientDomain T>
T StateSum::evaluate(const T& a, std::span<const T> vars, EvaluationBudget budget) const {
  if (vars.size() != variable_count()) {
    throw ContractError("expected " + std::to_string(variable_count()) + " variable values, got " +
                        std::to_string(vars.size()));
  }
  const T one = one_like(a);
  const T sa2 = exact::sigma(a * a);
  std::vector<std::array<T, 3>> table;
  table.reserve(tetravalent_.size());
  for (int vi : tetravalent_) {
    const auto& label = graph_.vertices()[static_cast<std::size_t>(vi)].label;
    T u = one;
    for (std::size_t k = 0; k < label.size(); ++k) {
      if (label[k] != 0) u = u * exact::power(vars[k], label[k]);
    }
    table.push_back({sa2, exact::sigma(a * u), exact::sigma(a * inverse(u))});
  }
  T total = zero_like(a);
  for (const auto& choice : choices_) {
    T w = one;
    for (std::size_t k = 0; k < choice.size(); ++k) w = w * table[k][choice[k]];
    total = total + w;
    detail::check_term_budget(total, budget);
  }
  return total;
}

/// One-shot convenience; prefer StateSum for repeated evaluation.
template <exact::CoefficientDomain T>
T partition_function(const IceGraph& g, const T& a, std::span<const T> vars,
                     const WeightRule& rule = WeightRule::calibrated(),
                     std::uint64_t max_states = kDefaultMaxStates) {
  return StateSum(g, rule, max_states).evaluate<T>(a, vars);
}

}  // namespace qtasm::ice
