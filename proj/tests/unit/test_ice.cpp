#include "doctest.h"
#include "qtasm/altsign/asm.hpp"
#include "qtasm/exact/sampling.hpp"
#include "qtasm/ice/partition.hpp"
#include "qtasm/ice/yang_baxter.hpp"

using namespace qtasm;
using namespace qtasm::exact;
using namespace qtasm::ice;
using altsign::SymmetryClass;

TEST_CASE("pattern sizes") {
  const auto g = build_pattern(Pattern::Dwbc, 1);
  CHECK(g.tetravalent_count() == 1);
  CHECK(g.edges().size() == 4);
  const auto q = build_pattern(Pattern::QtOdd, 5);
  CHECK(q.tetravalent_count() == 6);
  CHECK(q.bivalent_count() == 2);
  CHECK(q.variables().size() == 3);
  CHECK(build_pattern(Pattern::QtEven, 8).tetravalent_count() == 16);
  CHECK(build_pattern(Pattern::HtOdd, 5).tetravalent_count() == 12);
  CHECK(build_pattern(Pattern::HtOdd, 5).variables().size() == 6);
  CHECK_THROWS_AS(build_pattern(Pattern::QtEven, 6), ContractError);
  CHECK_THROWS_AS(build_pattern(Pattern::QtOdd, 4), ContractError);
  CHECK_THROWS_AS(build_pattern(Pattern::Dwbc, 0), ContractError);
  CHECK(parse_pattern("qt-odd") == Pattern::QtOdd);
  CHECK_THROWS_AS(parse_pattern("qt"), ContractError);
}

TEST_CASE("state counts equal matrix counts") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_states(build_pattern(Pattern::Dwbc, n)) == altsign::count(n, SymmetryClass::All));
  }
  for (int n : {1, 3, 5, 7, 9}) {
    CHECK(count_states(build_pattern(Pattern::QtOdd, n)) == altsign::count(n, SymmetryClass::QuarterTurn));
  }
  CHECK(count_states(build_pattern(Pattern::QtEven, 4)) == 2);
  for (int n : {1, 3, 5}) {
    CHECK(count_states(build_pattern(Pattern::HtOdd, n)) == altsign::count(n, SymmetryClass::HalfTurn));
  }
}

TEST_CASE("every enumerated state obeys the ice rule") {
  for (auto [p, n] : {std::pair{Pattern::QtOdd, 7}, {Pattern::HtOdd, 5}, {Pattern::Dwbc, 4}, {Pattern::QtEven, 4}}) {
    const auto g = build_pattern(p, n);
    const auto states = enumerate_states(g);
    for (const auto& s : states) CHECK(satisfies_ice_rule(g, s));
    for (std::size_t i = 1; i < states.size(); ++i) CHECK(!(states[i] == states[i - 1]));
  }
  CHECK_THROWS_AS(count_states(build_pattern(Pattern::Dwbc, 5), 100), BudgetExceeded);
}

TEST_CASE("single vertex and the base case") {
  const auto z1 = StateSum(build_pattern(Pattern::Dwbc, 1));
  const std::vector<Rational> ones{Rational(1), Rational(1)};
  CHECK(z1.evaluate<Rational>(Rational(2), ones) == Rational(15, 4));

  const auto sym = StateSum(build_pattern(Pattern::QtOdd, 3)).symbolic();
  const auto a = SymbolicPoly::variable(sym.vars(), 0);
  CHECK(sym == sigma(a) * sigma(a * a));
}

TEST_CASE("degenerate weights at zeta") {
  const CycQ6 s = sigma(CycQ6::zeta());
  for (auto [p, n] : {std::pair{Pattern::QtOdd, 5}, {Pattern::QtOdd, 7}, {Pattern::Dwbc, 3}, {Pattern::HtOdd, 5}}) {
    const StateSum z(build_pattern(p, n));
    const std::vector<CycQ6> ones(z.variable_count(), CycQ6(1));
    const auto expected = CycQ6(static_cast<long>(z.state_count())) *
                          power(s, static_cast<int>(z.graph().tetravalent_count()));
    CHECK(z.evaluate<CycQ6>(CycQ6::zeta(), ones) == expected);
  }
}

TEST_CASE("yang-baxter with x y z = a") {
  const YangBaxterModel model;
  PointSampler rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a = rng.next();
    const Rational x = rng.next();
    const Rational y = rng.next();
    CHECK(model.check(a, x, y, a / (x * y)));
  }
  // x = y = z with x^3 = a
  CHECK(model.check(Rational(8), Rational(2), Rational(2), Rational(2)));
  CHECK(model.sides(Rational(3), Rational(2), Rational(5), Rational(7)).mismatches() > 0);
  CHECK_THROWS_AS((void)model.check(Rational(3), Rational(2), Rational(5), Rational(7)), ContractError);
  const YangBaxterModel mirror(WeightRule::mirrored());
  CHECK(mirror.sides(Rational(3), Rational(2), Rational(5), Rational(3, 10)).mismatches() > 0);
}

TEST_CASE("symbolic transposition and inversion symmetry") {
  for (int n : {5, 7}) {
    const auto z = StateSum(build_pattern(Pattern::QtOdd, n)).symbolic();
    const std::size_t nv = z.nvars();
    std::vector<std::size_t> swap(nv);
    for (std::size_t k = 0; k < nv; ++k) swap[k] = k;
    std::swap(swap[1], swap[2]);
    CHECK(z.substitute_permutation(swap) == z);
    std::vector<std::size_t> xs;
    for (std::size_t k = 1; k < nv; ++k) xs.push_back(k);
    CHECK(z.invert_variables(xs) == z);
  }
}
