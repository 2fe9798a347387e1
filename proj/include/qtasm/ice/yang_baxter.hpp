#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/ice/graph.hpp"
#include "qtasm/ice/partition.hpp"

namespace qtasm::ice {

/// Partition functions of both sides, one entry per boundary assignment.
/// Bit k of the index (k = 0 for terminal "A") set means that terminal
/// points into the graph.
template <class T>
struct YangBaxterSides {
  std::array<std::pair<T, T>, 64> sides;

  [[nodiscard]] int mismatches() const {
    int n = 0;
    for (const auto& [l, r] : sides) n += l == r ? 0 : 1;
    return n;
  }
};

/// The 64 fixed-boundary versions of each side, built once.
class YangBaxterModel {
 public:
  explicit YangBaxterModel(WeightRule rule = WeightRule::calibrated());

  template <exact::CoefficientDomain T>
  [[nodiscard]] YangBaxterSides<T> sides(const T& a, const T& x, const T& y, const T& z) const {
    YangBaxterSides<T> out;
    const std::vector<T> vars{x, y, z};
    for (std::size_t mask = 0; mask < 64; ++mask) {
      out.sides[mask] = {left_[mask].evaluate<T>(a, vars), right_[mask].evaluate<T>(a, vars)};
    }
    return out;
  }

  /// Throws ContractError unless x y z = a.
  template <exact::CoefficientDomain T>
  [[nodiscard]] bool check(const T& a, const T& x, const T& y, const T& z) const {
    if (!(x * y * z == a)) throw ContractError("yang_baxter_check requires x*y*z = a");
    return sides(a, x, y, z).mismatches() == 0;
  }

 private:
  std::vector<StateSum> left_;
  std::vector<StateSum> right_;
};

template <exact::CoefficientDomain T>
bool yang_baxter_check(const T& a, const T& x, const T& y, const T& z,
                       const WeightRule& rule = WeightRule::calibrated()) {
  return YangBaxterModel(rule).check(a, x, y, z);
}

}  // namespace qtasm::ice
