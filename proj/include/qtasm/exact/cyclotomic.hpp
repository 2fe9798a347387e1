#pragma once

#include <iosfwd>
#include <string>

#include "qtasm/exact/rational.hpp"

namespace qtasm::exact {

/// Element c0 + c1*zeta of Q(zeta), zeta = exp(i*pi/3), reduced with
/// zeta^2 = zeta - 1. Every nonzero element is invertible.
class CycQ6 {
 public:
  CycQ6() = default;
  CycQ6(Rational c0) : c0_(std::move(c0)) {}  // NOLINT(implicit)
  template <std::integral I>
  CycQ6(I c0) : c0_(c0) {}  // NOLINT(implicit)
  CycQ6(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static CycQ6 zeta() { return CycQ6(Rational(0), Rational(1)); }

  [[nodiscard]] const Rational& c0() const { return c0_; }
  [[nodiscard]] const Rational& c1() const { return c1_; }

  CycQ6& operator+=(const CycQ6& rhs);
  CycQ6& operator-=(const CycQ6& rhs);
  CycQ6& operator*=(const CycQ6& rhs);
  CycQ6& operator/=(const CycQ6& rhs);

  friend CycQ6 operator+(CycQ6 lhs, const CycQ6& rhs) { return lhs += rhs; }
  friend CycQ6 operator-(CycQ6 lhs, const CycQ6& rhs) { return lhs -= rhs; }
  friend CycQ6 operator*(CycQ6 lhs, const CycQ6& rhs) { return lhs *= rhs; }
  friend CycQ6 operator/(CycQ6 lhs, const CycQ6& rhs) { return lhs /= rhs; }
  CycQ6 operator-() const { return CycQ6(-c0_, -c1_); }

  friend bool operator==(const CycQ6&, const CycQ6&) = default;

  /// Field norm c0^2 + c0*c1 + c1^2 (product with the complex conjugate).
  [[nodiscard]] Rational norm() const;
  [[nodiscard]] CycQ6 conjugate() const;
  [[nodiscard]] CycQ6 inverse() const;
  [[nodiscard]] bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  /// "c0 + c1*zeta".
  [[nodiscard]] std::string str() const;

 private:
  Rational c0_;
  Rational c1_;
};

std::ostream& operator<<(std::ostream& os, const CycQ6& v);

inline CycQ6 inverse(const CycQ6& v) { return v.inverse(); }
inline CycQ6 one_like(const CycQ6&) { return CycQ6(1); }
inline CycQ6 zero_like(const CycQ6&) { return CycQ6(0); }
inline bool is_zero(const CycQ6& v) { return v.is_zero(); }

}  // namespace qtasm::exact
