#include "doctest.h"
#include "qtasm/exact/sampling.hpp"
#include "qtasm/pfaffian/kuperberg.hpp"

using namespace qtasm;
using namespace qtasm::exact;
using qtasm::pfaffian::build_m;
using qtasm::pfaffian::determinant;
using qtasm::pfaffian::extract_c;
using qtasm::pfaffian::Matrix;
using qtasm::pfaffian::pfaffian_by_elimination;
using qtasm::pfaffian::pfaffian_by_matchings;
using qtasm::pfaffian::SkewMatrix;
using qtasm::pfaffian::z_r_qt;
using qtasm::pfaffian::z_tilde;

namespace {
template <class T>
T pfaffian_value(const SkewMatrix<T>& a) {
  return qtasm::pfaffian::pfaffian(a);
}
}  // namespace

namespace {

SkewMatrix<Rational> random_skew(PointSampler& rng, std::size_t n) {
  return SkewMatrix<Rational>::from_upper(n, Rational(0), [&](std::size_t, std::size_t) {
    return rng.next() - Rational(1);
  });
}

// Leibniz expansion, independent of both Pfaffian routines and of Bareiss
Rational leibniz_det(const Matrix<Rational>& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("pfaffian of small explicit matrices") {
  const auto two = SkewMatrix<Rational>::from_upper(2, Rational(0), [](auto, auto) { return Rational(5, 3); });
  CHECK(pfaffian_value(two) == Rational(5, 3));
  PointSampler rng(1);
  const auto a = random_skew(rng, 4);
  CHECK(pfaffian_value(a) == a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));
  Matrix<Rational> bad(2, Rational(0));
  bad(0, 1) = Rational(1);
  bad(1, 0) = Rational(1);
  CHECK_THROWS_AS(SkewMatrix<Rational>{bad}, ContractError);
  CHECK_THROWS_AS(SkewMatrix<Rational>{Matrix<Rational>(3, Rational(0))}, ContractError);
  // zero first row forces Pf = 0; a zero (0,1) entry forces a pivot swap
  const auto z = SkewMatrix<Rational>::from_upper(4, Rational(0), [](std::size_t i, std::size_t j) {
    return i == 0 ? Rational(0) : Rational(static_cast<long>(i + j));
  });
  CHECK(pfaffian_value(z) == Rational(0));
  const auto s = SkewMatrix<Rational>::from_upper(4, Rational(0), [](std::size_t i, std::size_t j) {
    return (i == 0 && j == 1) ? Rational(0) : Rational(static_cast<long>(i + 2 * j));
  });
  CHECK(pfaffian_by_elimination(s) == pfaffian_by_matchings(s));
}

TEST_CASE("pfaffian squared is the determinant") {
  PointSampler rng(2);
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_skew(rng, n);
      const Rational pf = pfaffian_value(a);
      CHECK(pf * pf == determinant(a.matrix()));
      if (n <= 6) CHECK(pf == pfaffian_by_matchings(a));
    }
  }
  for (std::size_t n : {2U, 4U, 6U}) {
    const auto a = random_skew(rng, n);
    CHECK(determinant(a.matrix()) == leibniz_det(a.matrix()));
  }
}

TEST_CASE("pfaffian over the cyclotomic field") {
  PointSampler rng(4);
  const auto a = SkewMatrix<CycQ6>::from_upper(6, CycQ6(0), [&](std::size_t, std::size_t) {
    return CycQ6(rng.next(), rng.next() - Rational(1));
  });
  const CycQ6 pf = pfaffian_by_elimination(a);
  CHECK(pf == pfaffian_by_matchings(a));
  CHECK(pf * pf == determinant(a.matrix()));
}

TEST_CASE("M entries") {
  const std::vector<Rational> x{Rational(2), Rational(3)};
  const Rational a(5, 7);
  const auto m = build_m(1, 1, a, std::span<const Rational>(x));
  CHECK(m(0, 1) == sigma(Rational(3, 2)) / alpha(Rational(3, 2), a));
  CHECK(m(0, 0) == Rational(0));
  CHECK(m(1, 0) == -m(0, 1));
  CHECK_THROWS_AS(build_m(3, 1, a, std::span<const Rational>(x)), ContractError);
  CHECK_THROWS_AS(build_m(1, 2, a, std::span<const Rational>(x)), ContractError);
  const std::vector<Rational> singular{Rational(2), Rational(2) * a};
  CHECK_THROWS_AS(build_m(1, 1, a, std::span<const Rational>(singular)), SingularPoint);
}

TEST_CASE("low-order values") {
  PointSampler rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = rng.next();
    const std::vector<Rational> x = rng.next_vector(2);
    if (x[0] == x[1]) continue;
    CHECK(z_r_qt(1, 1, a, x) == Rational(1));
    CHECK(z_r_qt(2, 1, a, x) == x[1] / x[0] + x[0] / x[1]);
    const std::vector<Rational> head{x[0]};
    const auto c = extract_c(1, a, std::span<const Rational>(head));
    CHECK(c == std::vector<Rational>{x[0], inverse(x[0])});
    CHECK(z_tilde(1, a, head) == Rational(1));
  }
}

TEST_CASE("symmetry in all variables") {
  PointSampler rng(9);
  for (int l = 1; l <= 3; ++l) {
    const Rational a = rng.next();
    std::vector<Rational> x = rng.next_vector(static_cast<std::size_t>(2 * l));
    for (int r : {1, 2}) {
      const Rational base = z_r_qt(r, l, a, x);
      for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        auto y = x;
        std::swap(y[k], y[k + 1]);
        CHECK(z_r_qt(r, l, a, y) == base);
      }
    }
    if (l >= 2) {
      std::vector<Rational> head(x.begin(), x.end() - 1);
      const Rational zt = z_tilde(l, a, head);
      std::swap(head.front(), head.back());
      CHECK(z_tilde(l, a, head) == zt);
    }
  }
}

TEST_CASE("coefficient extraction is consistent") {
  PointSampler rng(10);
  for (int l = 2; l <= 3; ++l) {
    const Rational a = rng.next();
    std::vector<Rational> x = rng.next_vector(static_cast<std::size_t>(2 * l - 1));
    const auto c1 = extract_c(l, a, std::span<const Rational>(x), 1);
    const auto c2 = extract_c(l, a, std::span<const Rational>(x), 2);
    CHECK(c1 == c2);
    const Rational t(13, 11);
    Rational sum(0);
    for (std::size_t i = 0; i < c1.size(); ++i) {
      sum = sum + c1[i] * power(t, 2 * static_cast<int>(i + 1) - 2 * l - 1);
    }
    x.push_back(t);
    CHECK(sum == z_r_qt(2, l, a, x));
  }
}

TEST_CASE("Z1 has centered even width 2l-2 in each variable") {
  PointSampler rng(12);
  for (int l = 1; l <= 3; ++l) {
    const Rational a = rng.next();
    std::vector<Rational> x;
    for (bool generic = false; !generic;) {
      x = rng.next_vector(static_cast<std::size_t>(2 * l));
      try {
        (void)z_r_qt(1, l, a, x);
        generic = true;
      } catch (const SingularPoint&) {
      }
    }
    for (std::size_t var = 0; var < x.size(); ++var) {
      std::vector<std::pair<Rational, Rational>> samples;
      for (int k = 0; samples.size() < static_cast<std::size_t>(2 * l + 3); ++k) {
        auto y = x;
        y[var] = Rational(k + 2, 3 * k + 1);
        try {
          samples.emplace_back(y[var], z_r_qt(1, l, a, y));
        } catch (const SingularPoint&) {
        }
      }
      CHECK_NOTHROW(interpolate_centered(samples, CenteredParity::of_width(2 * l - 2)));
    }
  }
}
