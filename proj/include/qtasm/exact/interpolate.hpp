#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"

namespace qtasm::exact {

enum class Parity { Even, Odd };

/// Shape of a centered univariate Laurent polynomial: exponents
/// -w, -w+2, ..., w, i.e. w+1 coefficients. Odd width means odd exponents,
/// which become even after one factor of x is pulled out.
struct CenteredParity {
  int width = 0;
  Parity parity = Parity::Even;

  static CenteredParity of_width(int w) { return {w, (w % 2 == 0) ? Parity::Even : Parity::Odd}; }

  [[nodiscard]] int coefficient_count() const { return width + 1; }
  [[nodiscard]] int lowest_exponent() const { return -width; }

  void validate() const {
    if (width < 0) throw ContractError("centered width must be nonnegative");
    if ((width % 2 == 0) != (parity == Parity::Even)) {
      throw ContractError("centered parity must match the parity of the width");
    }
  }
};

/// sum_k coeffs[k] * x^(2k - width)
template <class T>
struct CenteredLaurent {
  CenteredParity shape;
  std::vector<T> coeffs;

  [[nodiscard]] T operator()(const T& x) const {
    const T x2 = x * x;
    T acc = zero_like(x);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x2 + *it;
    return acc * power(x, -shape.width);
  }

  /// Coefficient of x^exponent (zero outside the window or wrong parity).
  [[nodiscard]] T coefficient(int exponent) const {
    const int shifted = exponent + shape.width;
    if (shifted < 0 || shifted % 2 != 0 || shifted / 2 >= static_cast<int>(coeffs.size())) {
      return zero_like(coeffs.front());
    }
    return coeffs[static_cast<std::size_t>(shifted / 2)];
  }
};

/// Recovers the unique polynomial of the given shape through the samples by
/// Lagrange interpolation in t = x^2. Samples beyond the first w+1 are used
/// as consistency checks.
template <CoefficientDomain T>
CenteredLaurent<T> interpolate_centered(std::span<const std::pair<T, T>> samples,
                                        CenteredParity shape) {
  shape.validate();
  const std::size_t n = static_cast<std::size_t>(shape.coefficient_count());
  if (samples.size() < n) {
    throw ContractError("need " + std::to_string(n) + " samples, got " +
                        std::to_string(samples.size()));
  }
  std::vector<T> ts;
  for (const auto& [x, v] : samples) {
    if (is_zero(x)) throw DomainError("interpolation point must be nonzero");
    T t = x * x;
    for (const auto& prev : ts) {
      if (prev == t) throw InterpolationError("interpolation points have repeated squares");
    }
    ts.push_back(std::move(t));
  }

  const T zero = zero_like(samples.front().first);
  const T one = one_like(samples.front().first);

  // master(t) = prod (t - t_k), lowest degree first
  std::vector<T> master{one};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<T> next(master.size() + 1, zero);
    for (std::size_t d = 0; d < master.size(); ++d) {
      next[d + 1] = next[d + 1] + master[d];
      next[d] = next[d] - master[d] * ts[k];
    }
    master = std::move(next);
  }

  std::vector<T> poly(n, zero);
  for (std::size_t k = 0; k < n; ++k) {
    // quotient master / (t - t_k) by synthetic division from the top
    std::vector<T> q(n, zero);
    T carry = zero;
    for (std::size_t d = n; d-- > 0;) {
      carry = master[d + 1] + carry * ts[k];
      q[d] = carry;
    }
    T denom = zero;
    for (std::size_t d = n; d-- > 0;) denom = denom * ts[k] + q[d];
    const auto& [x, value] = samples[k];
    const T scale = value * power(x, shape.width) * inverse(denom);
    for (std::size_t d = 0; d < n; ++d) poly[d] = poly[d] + q[d] * scale;
  }

  CenteredLaurent<T> out{shape, std::move(poly)};
  for (std::size_t k = n; k < samples.size(); ++k) {
    if (!(out(samples[k].first) == samples[k].second)) {
      throw InterpolationError("sample " + std::to_string(k) +
                               " is inconsistent with the declared centered width " +
                               std::to_string(shape.width));
    }
  }
  return out;
}

template <CoefficientDomain T>
CenteredLaurent<T> interpolate_centered(const std::vector<std::pair<T, T>>& samples,
                                        CenteredParity shape) {
  return interpolate_centered(std::span<const std::pair<T, T>>(samples), shape);
}

}  // namespace qtasm::exact
