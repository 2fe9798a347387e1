#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"

namespace qtasm::pfaffian {

/// Dense square matrix with exact entries, row-major.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

  [[nodiscard]] std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Antisymmetric matrix of even dimension with zero diagonal; checked on
/// construction.
template <class T>
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix<T> m) : m_(std::move(m)) {
    if (m_.dim() % 2 != 0) throw ContractError("skew matrix dimension must be even");
    for (std::size_t i = 0; i < m_.dim(); ++i) {
      if (!is_zero(m_(i, i))) throw ContractError("skew matrix needs a zero diagonal");
      for (std::size_t j = i + 1; j < m_.dim(); ++j) {
        if (!(m_(i, j) == -m_(j, i))) {
          throw ContractError("matrix is not antisymmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
        }
      }
    }
  }

  /// Builds from the strict upper triangle, filling the rest by antisymmetry.
  template <class F>
  static SkewMatrix from_upper(std::size_t n, const T& zero, F entry) {
    Matrix<T> m(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = entry(i, j);
        m(j, i) = -m(i, j);
      }
    }
    return SkewMatrix(std::move(m));
  }

  [[nodiscard]] std::size_t dim() const { return m_.dim(); }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  [[nodiscard]] const Matrix<T>& matrix() const { return m_; }

 private:
  Matrix<T> m_;
};

/// Expansion along the first row; its terms are exactly the signed perfect
/// matchings. Exponential, used as the reference for small dimensions.
template <exact::CoefficientDomain T>
T pfaffian_by_matchings(const SkewMatrix<T>& a) {
  const std::size_t n = a.dim();
  if (n == 0) return T(1);
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& rest) -> T {
    if (rest.empty()) return one_like(a(0, 0));
    T total = zero_like(a(0, 0));
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        if (k != j) sub.push_back(rest[k]);
      }
      T term = a(rest[0], rest[j]) * self(self, sub);
      total = (j % 2 == 1) ? total + term : total - term;
    }
    return total;
  };
  return rec(rec, idx);
}

/// Skew-symmetric elimination on pairs of rows/columns with pivoting; each
/// pivot exchange flips the sign.
template <exact::CoefficientDomain T>
T pfaffian_by_elimination(const SkewMatrix<T>& in) {
  const std::size_t n = in.dim();
  if (n == 0) return T(1);
  Matrix<T> a = in.matrix();
  T result = one_like(a(0, 0));
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t pivot = k + 1;
    while (pivot < n && is_zero(a(k, pivot))) ++pivot;
    if (pivot == n) return zero_like(result);
    if (pivot != k + 1) {
      a.swap_rows(k + 1, pivot);
      a.swap_cols(k + 1, pivot);
      result = -result;
    }
    const T p = a(k, k + 1);
    const T pinv = inverse(p);
    result = result * p;
    for (std::size_t i = k + 2; i < n; ++i) {
      const T u = a(i, k + 1) * pinv;
      const T v = a(i, k) * pinv;
      for (std::size_t j = k + 2; j < n; ++j) {
        a(i, j) = a(i, j) - (u * a(k, j) - v * a(k + 1, j));
      }
    }
  }
  return result;
}

inline constexpr std::size_t kMatchingCrossCheckDim = 6;

/// Elimination, cross-checked against the matching expansion for
/// dimensions up to kMatchingCrossCheckDim.
template <exact::CoefficientDomain T>
T pfaffian(const SkewMatrix<T>& a) {
  T value = pfaffian_by_elimination(a);
  if (a.dim() <= kMatchingCrossCheckDim && !(value == pfaffian_by_matchings(a))) {
    throw std::logic_error("pfaffian: elimination and matching expansion disagree");
  }
  return value;
}

/// Fraction-free (Bareiss) determinant with row pivoting.
template <exact::CoefficientDomain T>
T determinant(Matrix<T> a) {
  const std::size_t n = a.dim();
  if (n == 0) return T(1);
  T sign = one_like(a(0, 0));
  T prev = one_like(a(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return zero_like(sign);
    if (pivot != k) {
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    const T prev_inv = inverse(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) * prev_inv;
      }
      a(i, k) = zero_like(sign);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace qtasm::pfaffian
