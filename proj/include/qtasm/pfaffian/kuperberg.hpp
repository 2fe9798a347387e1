#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"
#include "qtasm/exact/interpolate.hpp"
#include "qtasm/exact/sampling.hpp"
#include "qtasm/pfaffian/pfaffian.hpp"

namespace qtasm::pfaffian {

namespace detail {

template <class T>
void require_size(std::span<const T> x, std::size_t n, const char* what) {
  if (x.size() != n) {
    throw ContractError(std::string(what) + " expects " + std::to_string(n) + " variables, got " +
                        std::to_string(x.size()));
  }
}

template <class T>
void require_r(int r) {
  if (r != 1 && r != 2) throw ContractError("r must be 1 or 2");
}

}  // namespace detail

/// M_ij = sigma(xbar_i^r x_j^r) / alpha(xbar_i x_j), a 2l x 2l skew matrix.
template <exact::CoefficientDomain T>
SkewMatrix<T> build_m(int r, int l, const T& a, std::span<const T> x) {
  detail::require_r<T>(r);
  detail::require_size(x, static_cast<std::size_t>(2 * l), "build_m");
  return SkewMatrix<T>::from_upper(x.size(), zero_like(a), [&](std::size_t i, std::size_t j) {
    const T u = inverse(x[i]) * x[j];
    const T den = exact::alpha(u, a);
    if (is_zero(den)) throw SingularPoint("alpha(xbar_i x_j) vanishes in M");
    return exact::sigma(exact::power(u, r)) * inverse(den);
  });
}

/// prod_{i<j} alpha(xbar_i x_j) / sigma(xbar_i x_j) * Pf M^(r).
template <exact::CoefficientDomain T>
T z_r_qt(int r, int l, const T& a, std::span<const T> x) {
  const SkewMatrix<T> m = build_m(r, l, a, x);
  T pre = one_like(a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const T u = inverse(x[i]) * x[j];
      const T s = exact::sigma(u);
      if (is_zero(s)) throw SingularPoint("sigma(xbar_i x_j) vanishes in the prefactor");
      pre = pre * exact::alpha(u, a) * inverse(s);
    }
  }
  return pre * pfaffian(m);
}

template <exact::CoefficientDomain T>
T z_r_qt(int r, int l, const T& a, const std::vector<T>& x) {
  return z_r_qt(r, l, a, std::span<const T>(x));
}

inline constexpr std::uint64_t kDefaultSampleSeed = 20240101;

/// Coefficients c_1..c_2l of Z^(2)(l; x) as a Laurent polynomial in x_2l with
/// exponents -(2l-1), ..., 2l-1 (odd), recovered from 2l+2 sample values of
/// x_2l; the two extra samples confirm the shape.
template <exact::CoefficientDomain T>
std::vector<T> extract_c(int l, const T& a, std::span<const T> x_head,
                         std::uint64_t seed = kDefaultSampleSeed) {
  detail::require_size(x_head, static_cast<std::size_t>(2 * l - 1), "extract_c");
  for (std::size_t i = 0; i < x_head.size(); ++i) {
    for (std::size_t j = i + 1; j < x_head.size(); ++j) {
      const T u = inverse(x_head[i]) * x_head[j];
      if (is_zero(exact::sigma(u)) || is_zero(exact::alpha(u, a))) {
        throw SingularPoint("extract_c: fixed variables are not generic");
      }
    }
  }
  exact::PointSampler rng(seed);
  std::vector<T> x(x_head.begin(), x_head.end());
  x.push_back(one_like(a));
  std::vector<std::pair<T, T>> samples;
  const std::size_t wanted = static_cast<std::size_t>(2 * l + 2);
  for (int attempt = 0; samples.size() < wanted; ++attempt) {
    if (attempt > 1000) throw InterpolationError("extract_c: could not find generic sample points");
    const T t(rng.next());
    bool repeated = false;
    for (const auto& s : samples) repeated = repeated || s.first * s.first == t * t;
    if (repeated) continue;
    x.back() = t;
    try {
      samples.emplace_back(t, z_r_qt(2, l, a, std::span<const T>(x)));
    } catch (const SingularPoint&) {
      continue;
    }
  }
  const auto poly = exact::interpolate_centered(samples, exact::CenteredParity::of_width(2 * l - 1));
  return poly.coeffs;
}

/// [prod x_k] c_2l(l; x) over the 2l-1 given variables.
template <exact::CoefficientDomain T>
T z_tilde(int l, const T& a, std::span<const T> x, std::uint64_t seed = kDefaultSampleSeed) {
  const auto c = extract_c(l, a, x, seed);
  T out = c.back();
  for (const auto& v : x) out = out * v;
  return out;
}

template <exact::CoefficientDomain T>
T z_tilde(int l, const T& a, const std::vector<T>& x, std::uint64_t seed = kDefaultSampleSeed) {
  return z_tilde(l, a, std::span<const T>(x), seed);
}

}  // namespace qtasm::pfaffian
