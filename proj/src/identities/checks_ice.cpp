#include <algorithm>

#include "harness.hpp"
#include "qtasm/altsign/asm.hpp"
#include "qtasm/identities/suite.hpp"
#include "qtasm/ice/yang_baxter.hpp"

namespace qtasm::identities {

using detail::draw;
using detail::draw_vector;
using detail::Point;
using detail::replaced;
using detail::view;
using detail::without;
using exact::power;
using exact::Rational;
using exact::sigma;
using exact::SymbolicPoly;

namespace {

IdentityReport make(std::string identity, std::string relation,
                    std::vector<std::pair<std::string, long>> params) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.relation = std::move(relation);
  r.parameters = std::move(params);
  return r;
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

void symbolic_result(IdentityReport& r, const SymbolicPoly& lhs, const SymbolicPoly& rhs, int comparisons = 1) {
  r.mode = CheckMode::Symbolic;
  r.points_tested = comparisons;
  r.passed = lhs == rhs;
  if (!r.passed) r.witness = Witness{{}, lhs.str(), rhs.str(), "symbolic polynomials differ"};
}

}  // namespace

IdentityReport Suite::yang_baxter() const {
  auto r = make("yang-baxter", "left and right three-vertex contractions agree for all 64 boundary orientations, x*y*z = a", {});
  const ice::YangBaxterModel model(options_.rule);
  detail::run_points(r, seed_for("yang-baxter"), options_.points,
                     [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                       const Rational a = draw(rng);
                       const Rational x = draw(rng);
                       const Rational y = draw(rng);
                       const Rational z = a / (x * y);
                       const auto sides = model.sides(a, x, y, z);
                       for (std::size_t mask = 0; mask < sides.sides.size(); ++mask) {
                         const auto& [lhs, rhs] = sides.sides[mask];
                         if (!(lhs == rhs)) {
                           Point p;
                           p.add("a", a).add("x", x).add("y", y).add("z", z);
                           return detail::compare(lhs, rhs, p, "boundary mask " + std::to_string(mask));
                         }
                       }
                       return std::nullopt;
                     });
  return r;
}

std::vector<IdentityReport> Suite::initial_values() const {
  std::vector<IdentityReport> out;
  {
    auto r = make("initial-value", "Z_QT(3) = sigma(a) sigma(a^2)", {{"order", 3}});
    const auto z = models_.sum(ice::Pattern::QtOdd, 3).symbolic();
    const auto a = SymbolicPoly::variable(z.vars(), 0);
    symbolic_result(r, z, sigma(a) * sigma(a * a));
    out.push_back(std::move(r));
  }
  {
    auto r = make("initial-value", "Z(1; x, y) = sigma(a^2)", {{"l", 1}});
    const auto z = models_.sum(ice::Pattern::Dwbc, 1).symbolic();
    const auto a = SymbolicPoly::variable(z.vars(), 0);
    symbolic_result(r, z, sigma(a * a));
    out.push_back(std::move(r));
  }
  {
    auto r = make("initial-value", "Z_HT(1) = 1", {{"order", 1}});
    const auto z = models_.sum(ice::Pattern::HtOdd, 1).symbolic();
    symbolic_result(r, z, one_like(z));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IdentityReport> Suite::symmetry_and_inversion(int m) const {
  std::vector<IdentityReport> out;
  const int order = 2 * m + 1;
  if (m <= 3) {
    auto r = make("symmetry-inversion", "Z_QT(2m+1) symmetric in x_1..x_m and invariant under x -> 1/x",
                  {{"m", m}});
    const auto z = models_.sum(ice::Pattern::QtOdd, order).symbolic();
    const std::size_t nv = z.nvars();  // a, x_1..x_{m+1}
    r.mode = CheckMode::Symbolic;
    r.passed = true;
    int comparisons = 0;
    for (int k = 1; k < m && r.passed; ++k) {
      std::vector<std::size_t> perm(nv);
      for (std::size_t v = 0; v < nv; ++v) perm[v] = v;
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
      const auto swapped = z.substitute_permutation(perm);
      ++comparisons;
      if (!(swapped == z)) {
        r.passed = false;
        r.witness = Witness{{}, z.str(), swapped.str(), "transposition x" + std::to_string(k) + " <-> x" +
                                                            std::to_string(k + 1)};
      }
    }
    if (r.passed) {
      std::vector<std::size_t> xs;
      for (std::size_t v = 1; v < nv; ++v) xs.push_back(v);
      const auto inverted = z.invert_variables(xs);
      ++comparisons;
      if (!(inverted == z)) {
        r.passed = false;
        r.witness = Witness{{}, z.str(), inverted.str(), "inversion of every x"};
      }
    }
    r.points_tested = comparisons;
    out.push_back(std::move(r));
  }
  if (m >= 2) {
    auto r = make("symmetry-inversion", "Z_QT(2m+1) symmetric in x_1..x_m and invariant under x -> 1/x",
                  {{"m", m}});
    detail::run_points(r, seed_for("symmetry-inversion/" + std::to_string(m)), options_.points,
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const Rational a = draw(rng);
                         const auto x = draw_vector(rng, static_cast<std::size_t>(m + 1));
                         Point p;
                         p.add("a", a).add_all("x", x);
                         const Rational base = models_.qt_odd(m, a, view(x));
                         auto y = x;
                         const auto k = static_cast<std::size_t>(idx % (m - 1));
                         std::swap(y[k], y[k + 1]);
                         if (auto w = detail::compare(base, models_.qt_odd(m, a, view(y)), p,
                                                      "transposition x" + std::to_string(k + 1) + " <-> x" +
                                                          std::to_string(k + 2))) {
                           return w;
                         }
                         std::vector<Rational> inv;
                         for (const auto& v : x) inv.push_back(v.inverse());
                         return detail::compare(base, models_.qt_odd(m, a, view(inv)), p, "inversion of every x");
                       });
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

const char* const kBulkRelation =
    "Z_QT(2m+1)|x_i=a x_j = s^2(a) s^2(a^2) prod_{k<=m, k!=i,j} s^2(a^2 x_j/x_k) s^2(a x_k/x_j) "
    "* s(a^2 x_j/x_{m+1}) s(a x_{m+1}/x_j) * Z_QT(2m-3; x \\ x_i, x_j)";

std::optional<Witness> bulk_trial(const Models& models, int m, std::size_t i, std::size_t j,
                                  exact::PointSampler& rng) {
  const Rational a = draw(rng);
  auto x = draw_vector(rng, static_cast<std::size_t>(m + 1));
  x[i] = a * x[j];
  Point p;
  p.add("a", a).add_all("x", x);
  const Rational lhs = models.qt_odd(m, a, view(x));
  Rational pre = power(sigma(a), 2) * power(sigma(a * a), 2);
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    if (k == i || k == j) continue;
    pre = pre * power(sigma(a * a * x[j] / x[k]), 2) * power(sigma(a * x[k] / x[j]), 2);
  }
  // the middle line enters once, not squared
  const auto mid = static_cast<std::size_t>(m);
  pre = pre * sigma(a * a * x[j] / x[mid]) * sigma(a * x[mid] / x[j]);
  const Rational rhs = pre * models.qt_odd(m - 2, a, view(without(x, {i, j})));
  return detail::compare(lhs, rhs, p, "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
}

}  // namespace

IdentityReport Suite::bulk_recursion(int m, int i, int j) const {
  if (m < 2 || i == j || i < 0 || j < 0 || i >= m || j >= m) {
    throw ContractError("bulk recursion needs m >= 2 and distinct indices below m");
  }
  auto r = make("bulk-recursion", kBulkRelation, {{"m", m}, {"i", i + 1}, {"j", j + 1}});
  detail::run_points(r, seed_for("bulk-recursion/" + std::to_string(m) + "/" + std::to_string(i) + "/" +
                                 std::to_string(j)),
                     options_.points, [&](exact::PointSampler& rng, int) {
                       return bulk_trial(models_, m, static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng);
                     });
  return r;
}

IdentityReport Suite::bulk_recursion(int m) const {
  if (m < 2) throw ContractError("bulk recursion needs m >= 2");
  const auto pairs = ordered_pairs(m);
  auto r = make("bulk-recursion", std::string(kBulkRelation) + ", all pairs i != j <= m", {{"m", m}});
  detail::run_points(r, seed_for("bulk-recursion/" + std::to_string(m)),
                     std::max(options_.points, static_cast<int>(pairs.size())),
                     [&](exact::PointSampler& rng, int idx) {
                       const auto [i, j] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                       return bulk_trial(models_, m, static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng);
                     });
  return r;
}

namespace {

// sigma(a) sigma(a^2) prod_{k != j} [...] Z_QT(2m-1; x_1..^x_j..x_m, x_j) with
// x_{m+1} = a x_j (up) or x_j / a (down)
Rational middle_rhs(const Models& models, int m, const Rational& a, const std::vector<Rational>& x, std::size_t j,
                    bool up) {
  Rational pre = sigma(a) * sigma(a * a);
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    if (k == j) continue;
    if (up) {
      pre = pre * sigma(a * a * x[j] / x[k]) * sigma(a * x[k] / x[j]);
    } else {
      pre = pre * sigma(a * a * x[k] / x[j]) * sigma(a * x[j] / x[k]);
    }
  }
  std::vector<Rational> args;
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    if (k != j) args.push_back(x[k]);
  }
  args.push_back(x[j]);
  return pre * models.qt_odd(m - 1, a, view(args));
}

}  // namespace

std::vector<IdentityReport> Suite::middle_recursions(int m) const {
  std::vector<IdentityReport> out;
  for (bool up : {false, true}) {
    auto r = make("middle-recursions",
                  up ? "Z_QT(2m+1)|x_{m+1}=a x_j = s(a) s(a^2) prod_{k!=j} s(a^2 x_j/x_k) s(a x_k/x_j) "
                       "Z_QT(2m-1; x_1..^x_j..x_m, x_j)"
                     : "Z_QT(2m+1)|x_{m+1}=x_j/a = s(a) s(a^2) prod_{k!=j} s(a^2 x_k/x_j) s(a x_j/x_k) "
                       "Z_QT(2m-1; x_1..^x_j..x_m, x_j)",
                  {{"m", m}, {"direction", up ? 1 : -1}});
    const std::string key = "middle-recursions/" + std::to_string(m) + (up ? "/up" : "/down");
    detail::run_points(r, seed_for(key), std::max(options_.points, m),
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const auto j = static_cast<std::size_t>(idx % m);
                         const Rational a = draw(rng);
                         auto x = draw_vector(rng, static_cast<std::size_t>(m + 1));
                         const auto mid = static_cast<std::size_t>(m);
                         x[mid] = up ? a * x[j] : x[j] / a;
                         Point p;
                         p.add("a", a).add_all("x", x);
                         return detail::compare(models_.qt_odd(m, a, view(x)), middle_rhs(models_, m, a, x, j, up), p,
                                                "j=" + std::to_string(j + 1));
                       });
    out.push_back(std::move(r));
  }
  return out;
}

IdentityReport Suite::reconstruction(int m) const {
  const int width = m % 2 == 0 ? m : m - 1;
  auto r = make("reconstruction",
                "Z_QT(2m+1) in x_{m+1} rebuilt by centered interpolation from its 2m middle-line "
                "specializations matches the state sum at 5 fresh points",
                {{"m", m}, {"width", width}});
  constexpr int kFresh = 5;
  const int rounds = std::max(1, options_.points / kFresh);
  detail::run_points(r, seed_for("reconstruction/" + std::to_string(m)), rounds,
                     [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                       const Rational a = draw(rng);
                       const auto x = draw_vector(rng, static_cast<std::size_t>(m));
                       std::vector<std::pair<Rational, Rational>> samples;
                       for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
                         for (bool up : {false, true}) {
                           auto full = x;
                           full.push_back(up ? a * x[j] : x[j] / a);
                           samples.emplace_back(full.back(), middle_rhs(models_, m, a, full, j, up));
                         }
                       }
                       for (std::size_t s = 0; s < samples.size(); ++s) {
                         for (std::size_t t = s + 1; t < samples.size(); ++t) {
                           if (samples[s].first * samples[s].first == samples[t].first * samples[t].first) {
                             throw SingularPoint("coinciding interpolation nodes");
                           }
                         }
                       }
                       const auto poly = exact::interpolate_centered(samples, exact::CenteredParity::of_width(width));
                       for (int f = 0; f < kFresh; ++f) {
                         auto full = x;
                         full.push_back(draw(rng));
                         const Rational direct = models_.qt_odd(m, a, view(full));
                         Point p;
                         p.add("a", a).add_all("x", full);
                         if (auto w = detail::compare(poly(full.back()), direct, p, "interpolant vs state sum")) {
                           return w;
                         }
                       }
                       return std::nullopt;
                     });
  if (r.passed) r.points_tested *= kFresh;
  return r;
}

std::vector<IdentityReport> Suite::enumeration() const {
  using altsign::SymmetryClass;
  std::vector<IdentityReport> out;
  for (int l : {1, 2}) {
    for (int eps : {-1, 0, 1}) {
      auto r = make("enumeration", "A_QT(4l+e) = A(l)^2 A_HT(2l+e)", {{"l", l}, {"epsilon", eps}});
      r.mode = CheckMode::Exhaustive;
      const auto qt = altsign::count(4 * l + eps, SymmetryClass::QuarterTurn);
      const auto all = altsign::count(l, SymmetryClass::All);
      const auto ht = altsign::count(2 * l + eps, SymmetryClass::HalfTurn);
      r.points_tested = 1;
      r.passed = qt == all * all * ht;
      if (!r.passed) {
        r.witness = Witness{{}, std::to_string(qt), std::to_string(all) + "^2 * " + std::to_string(ht), ""};
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

const char* const kDwbcRelation =
    "Z(l; x, y)|y_i=a x_j = s(a^2) prod_{k!=i} s(a y_k/x_j) prod_{k!=j} s(a^2 x_j/x_k) "
    "Z(l-1; x \\ x_j, y \\ y_i)";

std::optional<Witness> dwbc_trial(const Models& models, int l, std::size_t i, std::size_t j,
                                  exact::PointSampler& rng) {
  const Rational a = draw(rng);
  const auto x = draw_vector(rng, static_cast<std::size_t>(l));
  const auto y = replaced(draw_vector(rng, static_cast<std::size_t>(l)), i, a * x[j]);
  Point p;
  p.add("a", a).add_all("x", x).add_all("y", y);
  Rational pre = sigma(a * a);
  for (std::size_t k = 0; k < static_cast<std::size_t>(l); ++k) {
    if (k != i) pre = pre * sigma(a * y[k] / x[j]);
    if (k != j) pre = pre * sigma(a * a * x[j] / x[k]);
  }
  const auto xl = without(x, {j});
  const auto yl = without(y, {i});
  return detail::compare(models.dwbc(l, a, view(x), view(y)), pre * models.dwbc(l - 1, a, view(xl), view(yl)), p,
                         "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
}

}  // namespace

IdentityReport Suite::dwbc_recursion(int l, int i, int j) const {
  if (i == j) throw ContractError("the domain-wall recursion needs i != j");
  if (l < 2 || i < 0 || j < 0 || i >= l || j >= l) throw ContractError("domain-wall recursion needs l >= 2, i, j < l");
  auto r = make("dwbc-ht-recursions", kDwbcRelation, {{"l", l}, {"i", i + 1}, {"j", j + 1}});
  detail::run_points(r, seed_for("dwbc/" + std::to_string(l) + "/" + std::to_string(i) + "/" + std::to_string(j)),
                     options_.points, [&](exact::PointSampler& rng, int) {
                       return dwbc_trial(models_, l, static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng);
                     });
  return r;
}

IdentityReport Suite::dwbc_recursion(int l) const {
  const auto pairs = ordered_pairs(l);
  auto r = make("dwbc-ht-recursions", std::string(kDwbcRelation) + ", all pairs i != j", {{"l", l}});
  detail::run_points(r, seed_for("dwbc/" + std::to_string(l)),
                     std::max(options_.points, static_cast<int>(pairs.size())),
                     [&](exact::PointSampler& rng, int idx) {
                       const auto [i, j] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                       return dwbc_trial(models_, l, static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng);
                     });
  return r;
}

std::vector<IdentityReport> Suite::widths(int m) const {
  std::vector<IdentityReport> out;
  const auto z = models_.sum(ice::Pattern::QtOdd, 2 * m + 1).symbolic();
  for (int var = 1; var <= m + 1; ++var) {
    const int w = var <= m ? 2 * m - 2 : (m % 2 == 0 ? m : m - 1);
    auto r = make("widths",
                  var <= m ? "Z_QT(2m+1) is centered of width 2m-2 in x_i, i <= m"
                           : "Z_QT(2m+1) is centered of width m (m even) or m-1 (m odd) in x_{m+1}",
                  {{"m", m}, {"variable", var}, {"width", w}});
    r.mode = CheckMode::Symbolic;
    r.points_tested = 1;
    const auto exps = z.exponents_of(static_cast<std::size_t>(var));
    bool ok = !exps.empty() && exps.count(w) == 1 && exps.count(-w) == 1;
    for (int e : exps) ok = ok && e >= -w && e <= w && (e + w) % 2 == 0;
    r.passed = ok;
    if (!ok) {
      std::string seen;
      for (int e : exps) seen += (seen.empty() ? "" : " ") + std::to_string(e);
      r.witness = Witness{{}, "exponents {" + seen + "}", "centered width " + std::to_string(w), ""};
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qtasm::identities
