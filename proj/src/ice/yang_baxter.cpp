#include "qtasm/ice/yang_baxter.hpp"

namespace qtasm::ice {

namespace {

IceGraph fix_terminals(const IceGraph& g, std::size_t mask) {
  std::vector<std::pair<int, bool>> fixed;
  for (std::size_t k = 0; k < kYangBaxterTerminals.size(); ++k) {
    fixed.emplace_back(g.terminal(kYangBaxterTerminals[k]), ((mask >> k) & 1U) != 0);
  }
  return g.with_terminals(fixed);
}

}  // namespace

YangBaxterModel::YangBaxterModel(WeightRule rule) {
  const auto [left, right] = yang_baxter_graphs();
  for (std::size_t mask = 0; mask < 64; ++mask) {
    left_.emplace_back(fix_terminals(left, mask), rule);
    right_.emplace_back(fix_terminals(right, mask), rule);
  }
}

}  // namespace qtasm::ice
