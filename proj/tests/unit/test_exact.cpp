#include <array>
#include <vector>

#include "doctest.h"
#include "qtasm/exact/field.hpp"
#include "qtasm/exact/interpolate.hpp"
#include "qtasm/exact/sampling.hpp"

using namespace qtasm;
using namespace qtasm::exact;

namespace {

// Q(zeta) realised as 2x2 rational matrices: zeta acts on the basis (1, zeta)
// by the companion matrix of t^2 - t + 1.
using Mat2 = std::array<Rational, 4>;

Mat2 as_matrix(const CycQ6& v) {
  // multiplication by c0 + c1*zeta: 1 -> c0 + c1 zeta, zeta -> -c1 + (c0 + c1) zeta
  return {v.c0(), -v.c1(), v.c1(), v.c0() + v.c1()};
}

Mat2 mul(const Mat2& p, const Mat2& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4").str() == "-4");
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("2/-4"), ContractError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), ContractError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(Rational(7, 3).inverse() == Rational(3, 7));
}

TEST_CASE("sigma and alpha at small rationals") {
  CHECK(sigma(Rational(2)) == Rational(3, 2));
  CHECK(sigma(Rational(1)) == Rational(0));
  CHECK(alpha(Rational(3), Rational(2)) == Rational(-175, 36));
  CHECK(sigma(Rational(4)) == Rational(15, 4));
}

TEST_CASE("cyclotomic relations") {
  const CycQ6 z = CycQ6::zeta();
  CHECK(z * z == z - CycQ6(1));
  CHECK(power(z, 3) == CycQ6(-1));
  CHECK(power(z, 6) == CycQ6(1));
  CHECK(z.conjugate() == CycQ6(1) - z);
  CHECK(z * z.conjugate() == CycQ6(1));
  CHECK(sigma(z) == CycQ6(-1, 2));
  CHECK(sigma(z) * sigma(z) == CycQ6(-3));
  CHECK(sigma(z * z) == sigma(z));
  CHECK_THROWS_AS(inverse(CycQ6(0)), DomainError);
  CHECK(CycQ6(Rational(1, 2), Rational(-3)).str() == "1/2 + -3*zeta");
}

TEST_CASE("cyclotomic product agrees with the matrix representation") {
  PointSampler rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const CycQ6 u(rng.next() - Rational(1), rng.next() - Rational(1));
    const CycQ6 v(rng.next() - Rational(1), rng.next() - Rational(1));
    CHECK(as_matrix(u * v) == mul(as_matrix(u), as_matrix(v)));
    if (!u.is_zero()) CHECK(u * inverse(u) == CycQ6(1));
    CHECK(u.norm() == (u * u.conjugate()).c0());
    CHECK((u * u.conjugate()).c1() == Rational(0));
  }
}

TEST_CASE("laurent polynomial evaluation is a ring homomorphism") {
  const auto vars = make_variables({"a", "x"});
  const auto a = SymbolicPoly::variable(vars, 0);
  const auto x = SymbolicPoly::variable(vars, 1);
  const SymbolicPoly p = sigma(a * x) * sigma(a * inverse(x)) + SymbolicPoly::constant(vars, Rational(3, 2));
  const SymbolicPoly q = a - inverse(x) * x * x;
  PointSampler rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Rational> pt = rng.next_vector(2);
    const auto pv = p.evaluate<Rational>(pt);
    const auto qv = q.evaluate<Rational>(pt);
    CHECK((p * q).evaluate<Rational>(pt) == pv * qv);
    CHECK((p + q).evaluate<Rational>(pt) == pv + qv);
    CHECK(alpha(pt[1], pt[0]) == pv - Rational(3, 2));
  }
  CHECK_THROWS_AS(inverse(a + x), DomainError);
  CHECK(p - p == SymbolicPoly(vars));
}

TEST_CASE("laurent substitutions") {
  const auto vars = make_variables({"x", "y"});
  const auto x = SymbolicPoly::variable(vars, 0);
  const auto y = SymbolicPoly::variable(vars, 1);
  const SymbolicPoly p = x * x * inverse(y) + y;
  const std::vector<std::size_t> swap{1, 0};
  CHECK(p.substitute_permutation(swap) == y * y * inverse(x) + x);
  const std::vector<std::size_t> both{0, 1};
  CHECK(p.invert_variables(both) == inverse(x * x) * y + inverse(y));
  CHECK(p.exponent_range(0) == std::pair{0, 2});
  CHECK(p.str() == "1*y^1\n1*x^2*y^-1");
}

TEST_CASE("centered interpolation recovers random polynomials") {
  PointSampler rng(3);
  for (int width = 0; width <= 6; ++width) {
    const auto shape = CenteredParity::of_width(width);
    CenteredLaurent<Rational> truth{shape, rng.next_vector(static_cast<std::size_t>(width + 1))};
    std::vector<std::pair<Rational, Rational>> samples;
    for (int k = 1; k <= width + 3; ++k) {
      const Rational t(k + 1, 2 * k + 1);
      samples.emplace_back(t, truth(t));
    }
    const auto got = interpolate_centered(samples, shape);
    CHECK(got.coeffs == truth.coeffs);
    // direct evaluation through an independent power sum
    const Rational t(17, 5);
    Rational direct(0);
    for (int k = 0; k <= width; ++k) direct = direct + truth.coeffs[static_cast<std::size_t>(k)] * power(t, 2 * k - width);
    CHECK(got(t) == direct);
  }
}

TEST_CASE("centered interpolation failure modes") {
  std::vector<std::pair<Rational, Rational>> samples{{Rational(1), Rational(1)}, {Rational(-1), Rational(2)}};
  CHECK_THROWS_AS(interpolate_centered(samples, CenteredParity::of_width(1)), InterpolationError);
  CHECK_THROWS_AS(interpolate_centered(samples, CenteredParity::of_width(4)), ContractError);
  CHECK_THROWS_AS((CenteredParity{2, Parity::Odd}.validate()), ContractError);
  // x^2 + x^-2 does not fit width 0
  std::vector<std::pair<Rational, Rational>> wide;
  for (int k = 2; k < 5; ++k) {
    const Rational t(k);
    wide.emplace_back(t, t * t + inverse(t * t));
  }
  CHECK_THROWS_AS(interpolate_centered(wide, CenteredParity::of_width(0)), InterpolationError);
}

TEST_CASE("sampler is deterministic") {
  PointSampler a(99);
  PointSampler b(99);
  CHECK(a.next_vector(10) == b.next_vector(10));
}
