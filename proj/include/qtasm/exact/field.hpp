#pragma once

#include <concepts>
#include <cstdlib>

#include "qtasm/exact/cyclotomic.hpp"
#include "qtasm/exact/laurent.hpp"
#include "qtasm/exact/rational.hpp"

namespace qtasm::exact {

/// Exact coefficient domain: ring operations, exact equality, units
/// invertible through a free `inverse` that throws DomainError otherwise.
template <class T>
concept CoefficientDomain = requires(const T& x) {
  { x + x } -> std::convertible_to<T>;
  { x - x } -> std::convertible_to<T>;
  { x * x } -> std::convertible_to<T>;
  { -x } -> std::convertible_to<T>;
  { x == x } -> std::convertible_to<bool>;
  { inverse(x) } -> std::convertible_to<T>;
  { one_like(x) } -> std::convertible_to<T>;
  { zero_like(x) } -> std::convertible_to<T>;
};

using SymbolicPoly = LaurentPoly<Rational>;

template <CoefficientDomain T>
T power(const T& base, int exponent) {
  T acc = one_like(base);
  const T b = exponent < 0 ? inverse(base) : base;
  for (int k = 0; k < std::abs(exponent); ++k) acc = acc * b;
  return acc;
}

/// sigma(u) = u - 1/u
template <CoefficientDomain T>
T sigma(const T& u) {
  return u - inverse(u);
}

/// alpha(u) = sigma(a u) sigma(a / u)
template <CoefficientDomain T>
T alpha(const T& u, const T& a) {
  return sigma(a * u) * sigma(a * inverse(u));
}

}  // namespace qtasm::exact
