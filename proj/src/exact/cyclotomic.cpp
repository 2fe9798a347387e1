#include "qtasm/exact/cyclotomic.hpp"

#include <ostream>

#include "qtasm/errors.hpp"

namespace qtasm::exact {

CycQ6& CycQ6::operator+=(const CycQ6& rhs) {
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

CycQ6& CycQ6::operator-=(const CycQ6& rhs) {
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

CycQ6& CycQ6::operator*=(const CycQ6& rhs) {
  // (p0 + p1 z)(q0 + q1 z) = p0 q0 + (p0 q1 + p1 q0) z + p1 q1 (z - 1)
  const Rational square = c1_ * rhs.c1_;
  Rational c0 = c0_ * rhs.c0_ - square;
  Rational c1 = c0_ * rhs.c1_ + c1_ * rhs.c0_ + square;
  c0_ = std::move(c0);
  c1_ = std::move(c1);
  return *this;
}

CycQ6& CycQ6::operator/=(const CycQ6& rhs) { return *this *= rhs.inverse(); }

Rational CycQ6::norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }

// conj(zeta) = 1/zeta = 1 - zeta
CycQ6 CycQ6::conjugate() const { return CycQ6(c0_ + c1_, -c1_); }

CycQ6 CycQ6::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DomainError("zero has no inverse in Q(zeta)");
  const Rational inv = n.inverse();
  const CycQ6 conj = conjugate();
  return CycQ6(conj.c0_ * inv, conj.c1_ * inv);
}

std::string CycQ6::str() const { return c0_.str() + " + " + c1_.str() + "*zeta"; }

std::ostream& operator<<(std::ostream& os, const CycQ6& v) { return os << v.str(); }

}  // namespace qtasm::exact
