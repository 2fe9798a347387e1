#include <algorithm>
#include <set>

#include "doctest.h"
#include "qtasm/altsign/asm.hpp"

using namespace qtasm;
using namespace qtasm::altsign;

namespace {

// every {-1,0,1} matrix of order n, checked by the raw definition
std::uint64_t brute_force_count(int n, SymmetryClass cls) {
  const int cells = n * n;
  std::uint64_t total = 1;
  for (int k = 0; k < cells; ++k) total *= 3;
  std::uint64_t found = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::uint64_t c = code;
    for (int k = 0; k < cells; ++k) {
      m[static_cast<std::size_t>(k / n)][static_cast<std::size_t>(k % n)] = static_cast<int>(c % 3) - 1;
      c /= 3;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int row = 0;
      int col = 0;
      int last_row = 0;
      int last_col = 0;
      for (int j = 0; j < n; ++j) {
        const int r = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const int s = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        row += r;
        col += s;
        if (r != 0) {
          ok = ok && r != last_row;
          last_row = r;
        }
        if (s != 0) {
          ok = ok && s != last_col;
          last_col = s;
        }
      }
      ok = ok && row == 1 && col == 1;
    }
    if (ok && satisfies_symmetry(m, cls)) ++found;
  }
  return found;
}

}  // namespace

TEST_CASE("validation reports the first violation") {
  CHECK_NOTHROW(AsmMatrix::parse_compact("0+0/+-+/0+0"));
  try {
    (void)AsmMatrix::parse_compact("+0/+0");
    FAIL("expected InvalidAsm");
  } catch (const InvalidAsm& e) {
    CHECK(e.violation().col == 0);
  }
  CHECK_THROWS_AS(AsmMatrix::parse_compact("+-/0+"), InvalidAsm);
  CHECK_THROWS_AS(AsmMatrix::parse_compact("+x/0+"), ContractError);
  CHECK(AsmMatrix::parse_compact("0+0/+-+/0+0").compact() == "0+0/+-+/0+0");
}

TEST_CASE("small orders agree with the raw definition") {
  for (int n = 1; n <= 3; ++n) {
    for (auto cls : {SymmetryClass::All, SymmetryClass::HalfTurn, SymmetryClass::QuarterTurn}) {
      if (cls == SymmetryClass::QuarterTurn && n == 2) continue;
      CHECK(count(n, cls) == brute_force_count(n, cls));
    }
  }
}

TEST_CASE("known counts through every strategy") {
  const std::vector<std::uint64_t> all{1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(count(n, SymmetryClass::All) == all[static_cast<std::size_t>(n - 1)]);
    CHECK(count(n, SymmetryClass::All, SearchStrategy::MonotoneTriangle) == all[static_cast<std::size_t>(n - 1)]);
  }
  const std::vector<std::uint64_t> ht{1, 2, 3, 10, 25};
  for (int n = 1; n <= 5; ++n) {
    for (auto s : {SearchStrategy::Backtracking, SearchStrategy::Filter, SearchStrategy::MonotoneTriangle}) {
      CHECK(count(n, SymmetryClass::HalfTurn, s) == ht[static_cast<std::size_t>(n - 1)]);
    }
  }
  CHECK(count(3, SymmetryClass::QuarterTurn) == 1);
  CHECK(count(4, SymmetryClass::QuarterTurn) == 2);
  CHECK(count(5, SymmetryClass::QuarterTurn) == 3);
  CHECK(count(7, SymmetryClass::QuarterTurn) == 12);
  CHECK(count(7, SymmetryClass::QuarterTurn, SearchStrategy::Filter) == 12);
}

TEST_CASE("enumeration yields distinct matrices with the requested symmetry") {
  const auto list = enumerate(7, SymmetryClass::QuarterTurn);
  std::set<AsmMatrix> unique(list.begin(), list.end());
  CHECK(unique.size() == list.size());
  for (const auto& m : list) {
    CHECK(m.has_symmetry(SymmetryClass::QuarterTurn));
    CHECK(m.has_symmetry(SymmetryClass::HalfTurn));
    CHECK(m.rotated_quarter_turn() == m);
    CHECK(center_entry(m) == -1);
  }
  for (const auto& m : enumerate(5, SymmetryClass::QuarterTurn)) CHECK(center_entry(m) == 1);
  for (const auto& m : enumerate(9, SymmetryClass::QuarterTurn)) CHECK(center_entry(m) == 1);
}

TEST_CASE("backtracking and filtering produce the same sets") {
  for (int n = 1; n <= 6; ++n) {
    auto a = enumerate(n, SymmetryClass::HalfTurn);
    auto b = enumerate(n, SymmetryClass::HalfTurn, SearchStrategy::MonotoneTriangle);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("order errors") {
  CHECK_THROWS_AS(count(6, SymmetryClass::QuarterTurn), ContractError);
  CHECK_THROWS_AS(count(0, SymmetryClass::All), ContractError);
  CHECK_THROWS_AS(count(9, SymmetryClass::All), BudgetExceeded);
  CHECK_THROWS_AS(parse_symmetry_class("vs"), ContractError);
  SearchBounds tight;
  tight.max_order_quarter_turn = 5;
  CHECK_THROWS_AS(count(7, SymmetryClass::QuarterTurn, SearchStrategy::Backtracking, tight), BudgetExceeded);
}
