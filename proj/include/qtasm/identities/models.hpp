#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "qtasm/ice/partition.hpp"

namespace qtasm::identities {

/// Lazily built, shared state sums for every pattern and order used by the
/// identity checks. Thread-safe.
class Models {
 public:
  explicit Models(ice::WeightRule rule = ice::WeightRule::calibrated(),
                  std::uint64_t max_states = ice::kDefaultMaxStates)
      : rule_(rule), max_states_(max_states) {}

  [[nodiscard]] const ice::WeightRule& rule() const { return rule_; }
  [[nodiscard]] const ice::StateSum& sum(ice::Pattern pattern, int order) const;

  /// Z_QT(2m+1; x_1..x_{m+1})
  template <exact::CoefficientDomain T>
  T qt_odd(int m, const T& a, std::span<const T> x) const {
    return sum(ice::Pattern::QtOdd, 2 * m + 1).evaluate<T>(a, x);
  }
  /// Z_QT(4l; x_1..x_{2l})
  template <exact::CoefficientDomain T>
  T qt_even(int l, const T& a, std::span<const T> x) const {
    return sum(ice::Pattern::QtEven, 4 * l).evaluate<T>(a, x);
  }
  /// Z(l; x, y)
  template <exact::CoefficientDomain T>
  T dwbc(int l, const T& a, std::span<const T> x, std::span<const T> y) const {
    std::vector<T> v(x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    return sum(ice::Pattern::Dwbc, l).evaluate<T>(a, v);
  }
  /// Z(l; x_1..x_{2l}) with y_i = x_{l+i}
  template <exact::CoefficientDomain T>
  T dwbc_joined(int l, const T& a, std::span<const T> x) const {
    return dwbc<T>(l, a, x.first(static_cast<std::size_t>(l)), x.subspan(static_cast<std::size_t>(l)));
  }
  /// Z_HT(2l-1; x, y)
  template <exact::CoefficientDomain T>
  T ht_odd(int l, const T& a, std::span<const T> x, std::span<const T> y) const {
    std::vector<T> v(x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    return sum(ice::Pattern::HtOdd, 2 * l - 1).evaluate<T>(a, v);
  }
  /// Z_HT(2l-1; x_1..x_{2l-1}) with y_i = x_{l+i} for i < l and y_l = x_l
  template <exact::CoefficientDomain T>
  T ht_joined(int l, const T& a, std::span<const T> x) const {
    const auto n = static_cast<std::size_t>(l);
    std::vector<T> y(x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
    y.push_back(x[n - 1]);
    return ht_odd<T>(l, a, x.first(n), std::span<const T>(y));
  }

 private:
  ice::WeightRule rule_;
  std::uint64_t max_states_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<ice::Pattern, int>, std::shared_ptr<const ice::StateSum>> cache_;
};

}  // namespace qtasm::identities
