#include "qtasm/ice/partition.hpp"

namespace qtasm::ice {

WeightRule WeightRule::calibrated() {
  using enum WeightKind;
  return WeightRule{{SigmaA2, SigmaA2, SigmaALabel, SigmaALabel, SigmaALabel, SigmaALabel}};
}

WeightRule WeightRule::mirrored() {
  using enum WeightKind;
  return WeightRule{{SigmaA2, SigmaA2, SigmaALabelInverse, SigmaALabelInverse, SigmaALabelInverse,
                     SigmaALabelInverse}};
}

std::string WeightRule::str() const {
  std::string out;
  for (std::size_t c = 0; c < by_configuration.size(); ++c) {
    if (c) out += ',';
    switch (by_configuration[c]) {
      case WeightKind::SigmaA2:
        out += "s(a^2)";
        break;
      case WeightKind::SigmaALabel:
        out += "s(a*u)";
        break;
      case WeightKind::SigmaALabelInverse:
        out += "s(a/u)";
        break;
    }
  }
  return out;
}

StateSum::StateSum(IceGraph graph, WeightRule rule, std::uint64_t max_states)
    : graph_(std::move(graph)), rule_(rule) {
  for (std::size_t v = 0; v < graph_.vertices().size(); ++v) {
    if (graph_.vertices()[v].kind == VertexKind::Tetravalent) tetravalent_.push_back(static_cast<int>(v));
  }
  for_each_state(
      graph_,
      [&](const IceState& s) {
        std::vector<std::uint8_t> choice;
        choice.reserve(tetravalent_.size());
        for (int vi : tetravalent_) {
          const int config = configuration(graph_, s, vi);
          // the in-in corner is corner (config - 2); odd corners carry the inverse label
          const bool inverted = config >= 2 && (config - 2) % 2 == 1;
          switch (rule_.by_configuration[static_cast<std::size_t>(config)]) {
            case WeightKind::SigmaA2:
              choice.push_back(0);
              break;
            case WeightKind::SigmaALabel:
              choice.push_back(inverted ? 2 : 1);
              break;
            case WeightKind::SigmaALabelInverse:
              choice.push_back(inverted ? 1 : 2);
              break;
          }
        }
        choices_.push_back(std::move(choice));
        return true;
      },
      max_states);
}

exact::SymbolicPoly StateSum::symbolic(EvaluationBudget budget) const {
  std::vector<std::string> names{"a"};
  names.insert(names.end(), graph_.variables().begin(), graph_.variables().end());
  const auto vars = exact::make_variables(std::move(names));
  const auto a = exact::SymbolicPoly::variable(vars, 0);
  std::vector<exact::SymbolicPoly> xs;
  for (std::size_t k = 0; k < variable_count(); ++k) xs.push_back(exact::SymbolicPoly::variable(vars, k + 1));
  return evaluate<exact::SymbolicPoly>(a, xs, budget);
}

}  // namespace qtasm::ice
