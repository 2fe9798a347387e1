// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qtasm/altsign/asm.hpp"
#include "qtasm/exact/sampling.hpp"
#include "qtasm/ice/partition.hpp"
#include "qtasm/identities/suite.hpp"
#include "qtasm/pfaffian/pfaffian.hpp"

using namespace qtasm;
using altsign::SearchStrategy;
using altsign::SymmetryClass;
using exact::Rational;

namespace {

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      log_ << "    mismatch: " << what << '\n';
    }
  }
  [[nodiscard]] bool passed() const { return passed_; }

 private:
  std::ostringstream& log_;
  bool passed_ = true;
};

using Body = std::function<std::string(Criterion&)>;

bool run(int number, const std::string& title, double limit_seconds, const Body& body) {
  std::ostringstream log;
  Criterion c(log);
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    c.expect(false, "runtime " + std::to_string(secs) + " s over limit " + std::to_string(limit_seconds) + " s");
  }
  std::printf("%s criterion %d: %s (%s; %.2f s)\n", c.passed() ? "PASS" : "FAIL", number, title.c_str(),
              summary.c_str(), secs);
  std::fputs(log.str().c_str(), stdout);
  std::fflush(stdout);
  return c.passed();
}

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string counts(Criterion& c) {
  const std::vector<std::uint64_t> all{1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    const auto bt = altsign::count(n, SymmetryClass::All, SearchStrategy::Backtracking);
    const auto tri = altsign::count(n, SymmetryClass::All, SearchStrategy::MonotoneTriangle);
    c.expect(bt == tri, "A(" + std::to_string(n) + ") strategies disagree: " + str(bt) + " vs " + str(tri));
    c.expect(bt == all[static_cast<std::size_t>(n - 1)], "A(" + std::to_string(n) + ") = " + str(bt));
  }
  const std::map<int, std::uint64_t> qt{{3, 1}, {4, 2}, {5, 3}, {7, 12}, {8, 40}, {9, 100}};
  for (auto [n, want] : qt) {
    const auto fd = altsign::count(n, SymmetryClass::QuarterTurn, SearchStrategy::Backtracking);
    // filtering all ASMs of order 9 is beyond desk scale; the ice model is the second route there
    const auto other = n <= 8 ? altsign::count(n, SymmetryClass::QuarterTurn, SearchStrategy::Filter)
                              : ice::count_states(ice::build_pattern(ice::Pattern::QtOdd, n));
    c.expect(fd == other, "A_QT(" + std::to_string(n) + ") routes disagree: " + str(fd) + " vs " + str(other));
    c.expect(fd == want, "A_QT(" + std::to_string(n) + ") = " + str(fd));
  }
  const std::vector<std::uint64_t> ht{1, 2, 3, 10, 25};
  for (int n = 1; n <= 5; ++n) {
    const auto fd = altsign::count(n, SymmetryClass::HalfTurn, SearchStrategy::Backtracking);
    const auto filt = altsign::count(n, SymmetryClass::HalfTurn, SearchStrategy::Filter);
    c.expect(fd == filt, "A_HT(" + std::to_string(n) + ") routes disagree");
    c.expect(fd == ht[static_cast<std::size_t>(n - 1)], "A_HT(" + std::to_string(n) + ") = " + str(fd));
  }
  return "A(1..6), A_QT(3,4,5,7,8,9), A_HT(1..5)";
}

std::string bijection(Criterion& c) {
  int cases = 0;
  auto check = [&](ice::Pattern p, int n, SymmetryClass cls) {
    const auto states = ice::count_states(ice::build_pattern(p, n));
    const auto matrices = altsign::count(n, cls);
    c.expect(states == matrices, std::string(ice::to_string(p)) + " " + std::to_string(n) + ": " + str(states) + " states vs " +
                                     str(matrices) + " matrices");
    ++cases;
  };
  for (int n = 1; n <= 5; ++n) check(ice::Pattern::Dwbc, n, SymmetryClass::All);
  for (int n : {3, 5, 7, 9}) check(ice::Pattern::QtOdd, n, SymmetryClass::QuarterTurn);
  check(ice::Pattern::QtEven, 4, SymmetryClass::QuarterTurn);
  for (int n : {1, 3, 5}) check(ice::Pattern::HtOdd, n, SymmetryClass::HalfTurn);
  return std::to_string(cases) + " patterns";
}

std::string base_case(Criterion& c) {
  const auto sym = ice::StateSum(ice::build_pattern(ice::Pattern::QtOdd, 3)).symbolic();
  const auto a = exact::SymbolicPoly::variable(sym.vars(), 0);
  const auto expected = exact::sigma(a) * exact::sigma(a * a);
  c.expect(sym == expected, "Z_QT(3) = " + sym.str());
  return std::to_string(sym.size()) + " monomials";
}

std::string tally(Criterion& c, const std::vector<identities::IdentityReport>& reports) {
  int points = 0;
  for (const auto& r : reports) {
    points += r.points_tested;
    if (!r.passed) c.expect(false, identities::to_text(r));
  }
  return std::to_string(reports.size()) + " checks, " + std::to_string(points) + " points";
}

std::string suite_all(Criterion& c) {
  identities::SuiteOptions o;
  o.seed = 42;
  o.points = 20;
  return tally(c, identities::Suite(o).run_all());
}

std::string reconstruction(Criterion& c) {
  identities::SuiteOptions o;
  o.seed = 42;
  o.points = 5;
  const identities::Suite suite(o);
  return tally(c, {suite.reconstruction(2), suite.reconstruction(3)});
}

Rational signed_entry(exact::PointSampler& rng) {
  const Rational r = rng.next();
  switch (rng.next_seed() % 5) {
    case 0: return Rational(0);
    case 1:
    case 2: return -r;
    default: return r;
  }
}

std::string pfaffians(Criterion& c) {
  exact::PointSampler rng(20240601);
  int matched = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 * (static_cast<std::size_t>(k) % 6 + 1);
    const auto a = pfaffian::SkewMatrix<Rational>::from_upper(
        n, Rational(0), [&](std::size_t, std::size_t) { return signed_entry(rng); });
    const Rational pf = pfaffian::pfaffian_by_elimination(a);
    const Rational det = pfaffian::determinant(a.matrix());
    c.expect(pf * pf == det, "Pf^2 != det at dimension " + std::to_string(n));
    if (n <= 6) {
      c.expect(pfaffian::pfaffian_by_matchings(a) == pf, "matchings disagree at dimension " + std::to_string(n));
      ++matched;
    }
  }
  return "100 matrices, " + std::to_string(matched) + " with the matching sum";
}

std::string enumeration(Criterion& c) {
  for (int l : {1, 2}) {
    const auto dw = altsign::count(l, SymmetryClass::All);
    for (int eps : {-1, 0, 1}) {
      const auto qt = altsign::count(4 * l + eps, SymmetryClass::QuarterTurn);
      const auto ht = altsign::count(2 * l + eps, SymmetryClass::HalfTurn);
      c.expect(qt == dw * dw * ht, "l=" + std::to_string(l) + " eps=" + std::to_string(eps) + ": " + str(qt) +
                                       " != " + str(dw) + "^2 * " + str(ht));
    }
  }
  return "l = 1, 2; eps = -1, 0, 1";
}

std::string widths(Criterion& c) {
  const identities::Suite suite;
  auto reports = suite.widths(2);
  for (auto& r : suite.widths(3)) reports.push_back(std::move(r));
  return tally(c, reports);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "count oracle agreement", 120, counts);
  ok &= run(2, "ice states biject with matrices", 60, bijection);
  ok &= run(3, "symbolic Z_QT(3) = s(a) s(a^2)", 0, base_case);
  ok &= run(4, "identity suite, 20 points each", 600, suite_all);
  ok &= run(5, "reconstruction of Z_QT(5), Z_QT(7) in x_{m+1}", 0, reconstruction);
  ok &= run(6, "Pf^2 = det and matching sum", 0, pfaffians);
  ok &= run(7, "A_QT(4l+e) = A(l)^2 A_HT(2l+e)", 0, enumeration);
  ok &= run(8, "centered widths of Z_QT(5), Z_QT(7)", 0, widths);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
