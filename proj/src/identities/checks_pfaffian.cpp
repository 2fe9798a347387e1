#include <algorithm>

#include "harness.hpp"
#include "qtasm/identities/suite.hpp"
#include "qtasm/pfaffian/kuperberg.hpp"

namespace qtasm::identities {

using detail::draw;
using detail::draw_vector;
using detail::Point;
using detail::replaced;
using detail::through_interpolation;
using detail::view;
using detail::without;
using exact::CycQ6;
using exact::power;
using exact::Rational;
using exact::sigma;
using pfaffian::z_r_qt;
using pfaffian::z_tilde;

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

std::string pair_note(std::size_t i, std::size_t j) {
  return "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
}

template <class T>
T signed_one(int exponent) {
  return T(exponent % 2 == 0 ? 1 : -1);
}

// prod_{k != i, j} sigma(a^2 x_j / x_k) sigma(a x_k / x_j)
template <class T>
T pair_product(const T& a, const std::vector<T>& x, std::size_t i, std::size_t j) {
  T out(1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k == i || k == j) continue;
    out = out * sigma(a * a * x[j] / x[k]) * sigma(a * x[k] / x[j]);
  }
  return out;
}

// prod_{k != i, j} sigma(a x_k / x_j)^p
template <class T>
T special_product(const T& a, const std::vector<T>& x, std::size_t i, std::size_t j, int p) {
  T out(1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k == i || k == j) continue;
    out = out * power(sigma(a * x[k] / x[j]), p);
  }
  return out;
}

template <class T>
std::vector<T> draw_lifted(exact::PointSampler& rng, std::size_t n) {
  return draw_vector<T>(rng, n);
}

}  // namespace

IdentityReport Suite::kuperberg_recursion(int l, int r) const {
  const auto pairs = ordered_pairs(2 * l);
  auto rep = make("kuperberg-recursion",
                  "Z^(r)(l)|x_i=a x_j = s(a^r)/s(a) prod_{k!=i,j} s(a^2 x_j/x_k) s(a x_k/x_j) Z^(r)(l-1; x \\ x_i, x_j)",
                  {{"l", l}, {"r", r}});
  const int width = r == 1 ? 2 * l - 2 : 2 * l - 1;
  detail::run_points(
      rep, seed_for("kuperberg/" + std::to_string(l) + "/" + std::to_string(r)),
      std::max(options_.points, static_cast<int>(pairs.size())),
      [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
        const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
        const auto i = static_cast<std::size_t>(ii);
        const auto j = static_cast<std::size_t>(jj);
        const Rational a = draw(rng);
        auto x = draw_vector(rng, static_cast<std::size_t>(2 * l));
        const Rational target = a * x[j];
        // the specialized point is a pole of the prefactor; reach it through the polynomial in x_i
        const Rational lhs = through_interpolation(
            [&](const Rational& t) { return z_r_qt(r, l, a, replaced(x, i, t)); }, target, width, rng);
        x[i] = target;
        Point p;
        p.add("a", a).add_all("x", x);
        const Rational rhs =
            sigma(power(a, r)) / sigma(a) * pair_product(a, x, i, j) * z_r_qt(r, l - 1, a, without(x, {i, j}));
        return detail::compare(lhs, rhs, p, pair_note(i, j));
      });
  return rep;
}

IdentityReport Suite::ztilde_recursion(int l) const {
  const auto pairs = ordered_pairs(2 * l - 1);
  auto rep = make("ztilde-recursion",
                  "Zt(l)|x_i=a x_j = -s(a^2)/s(a) prod_{k!=i,j} s(a^2 x_j/x_k) s(a x_k/x_j) Zt(l-1; x \\ x_i, x_j)",
                  {{"l", l}});
  detail::run_points(rep, seed_for("ztilde/" + std::to_string(l)),
                     std::max(options_.points, static_cast<int>(pairs.size())),
                     [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                       const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                       const auto i = static_cast<std::size_t>(ii);
                       const auto j = static_cast<std::size_t>(jj);
                       const Rational a = draw(rng);
                       auto x = draw_vector(rng, static_cast<std::size_t>(2 * l - 1));
                       const Rational target = a * x[j];
                       const Rational lhs = through_interpolation(
                           [&](const Rational& t) { return z_tilde(l, a, replaced(x, i, t)); }, target, 2 * l - 2, rng);
                       x[i] = target;
                       Point p;
                       p.add("a", a).add_all("x", x);
                       const Rational rhs = -sigma(a * a) / sigma(a) * pair_product(a, x, i, j) *
                                            z_tilde(l - 1, a, without(x, {i, j}));
                       return detail::compare(lhs, rhs, p, pair_note(i, j));
                     });
  return rep;
}

std::vector<IdentityReport> Suite::factorizations(int l) const {
  std::vector<IdentityReport> out;
  const std::string ls = std::to_string(l);
  const bool with_first_product = l == 1 || options_.extended;
  const bool with_even = l == 1 || options_.extended;
  if (with_first_product) {
    auto rep = make("factorizations",
                    "Z_QT(4l+1; x) = (-1)^l s^3l(a) s^l(a^2) Z^(1)(l; x \\ x_{2l+1}) Zt(l+1; x)",
                    {{"l", l}, {"order", 4 * l + 1}});
    detail::run_points(rep, seed_for("qt-even-product/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const Rational a = draw(rng);
                         const auto x = draw_vector(rng, static_cast<std::size_t>(2 * l + 1));
                         Point p;
                         p.add("a", a).add_all("x", x);
                         const Rational pre = signed_one<Rational>(l) * power(sigma(a), 3 * l) * power(sigma(a * a), l);
                         const Rational rhs =
                             pre * z_r_qt(1, l, a, without(x, {static_cast<std::size_t>(2 * l)})) * z_tilde(l + 1, a, x);
                         return detail::compare(models_.qt_odd(2 * l, a, view(x)), rhs, p);
                       });
    out.push_back(std::move(rep));
  }
  {
    auto rep = make("factorizations",
                    "Z_QT(4l-1; x) = (-1)^(l+1) s^(3l-2)(a) s^l(a^2) Z^(1)(l; x) Zt(l; x \\ x_{2l})",
                    {{"l", l}, {"order", 4 * l - 1}});
    detail::run_points(rep, seed_for("qt-odd-product/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const Rational a = draw(rng);
                         const auto x = draw_vector(rng, static_cast<std::size_t>(2 * l));
                         Point p;
                         p.add("a", a).add_all("x", x);
                         const Rational pre =
                             signed_one<Rational>(l + 1) * power(sigma(a), 3 * l - 2) * power(sigma(a * a), l);
                         const Rational rhs =
                             pre * z_r_qt(1, l, a, x) * z_tilde(l, a, without(x, {static_cast<std::size_t>(2 * l - 1)}));
                         return detail::compare(models_.qt_odd(2 * l - 1, a, view(x)), rhs, p);
                       });
    out.push_back(std::move(rep));
  }
  if (with_even) {
    auto rep = make("factorizations", "Z_QT(4l; x) = s^3l(a) s^l(a^2) Z^(1)(l; x) Z^(2)(l; x)",
                    {{"l", l}, {"order", 4 * l}});
    detail::run_points(rep, seed_for("even/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const Rational a = draw(rng);
                         const auto x = draw_vector(rng, static_cast<std::size_t>(2 * l));
                         Point p;
                         p.add("a", a).add_all("x", x);
                         const Rational rhs = power(sigma(a), 3 * l) * power(sigma(a * a), l) * z_r_qt(1, l, a, x) *
                                              z_r_qt(2, l, a, x);
                         return detail::compare(models_.qt_even(l, a, view(x)), rhs, p);
                       });
    out.push_back(std::move(rep));
  }
  return out;
}

IdentityReport Suite::cyclotomic_identity() const {
  auto rep = make("special-value", "at a = zeta: s(a^2 x) = -s(x/a) = s(a/x)", {});
  const CycQ6 a = CycQ6::zeta();
  detail::run_points(rep, seed_for("iden"), options_.points, [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
    const CycQ6 x(draw(rng));
    Point p;
    p.add("x", x);
    if (auto w = detail::compare(sigma(a * a * x), -sigma(x / a), p)) return w;
    return detail::compare(sigma(a * a * x), sigma(a / x), p);
  });
  return rep;
}

std::vector<IdentityReport> Suite::special_value(int l) const {
  std::vector<IdentityReport> out;
  const CycQ6 a = CycQ6::zeta();
  const CycQ6 sa2 = sigma(a * a);
  const std::string ls = std::to_string(l);
  const auto n = static_cast<std::size_t>(l);
  {
    auto rep = make("special-value", "at a = zeta: Z^(1)(l; x) = s^(-2l)(a^2) Z(l; x)^2", {{"l", l}});
    detail::run_points(rep, seed_for("zeta-product-1/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const auto x = draw_lifted<CycQ6>(rng, 2 * n);
                         Point p;
                         p.add_all("x", x);
                         const CycQ6 zd = models_.dwbc_joined(l, a, view(x));
                         return detail::compare(z_r_qt(1, l, a, x), power(sa2, -2 * l) * zd * zd, p);
                       });
    out.push_back(std::move(rep));
  }
  {
    auto rep = make("special-value", "at a = zeta: Zt(l; x) = (-1)^(l+1) s^(2-2l)(a^2) Z_HT(2l-1; x)", {{"l", l}});
    detail::run_points(rep, seed_for("zeta-product-2/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const auto x = draw_lifted<CycQ6>(rng, 2 * n - 1);
                         Point p;
                         p.add_all("x", x);
                         const CycQ6 rhs = signed_one<CycQ6>(l + 1) * power(sa2, 2 - 2 * l) * models_.ht_joined(l, a, view(x));
                         return detail::compare(z_tilde(l, a, x), rhs, p);
                       });
    out.push_back(std::move(rep));
  }
  {
    auto rep = make("special-value", "at a = zeta: Z_QT(4l+1; x) = Z(l; x \\ x_{2l+1})^2 Z_HT(2l+1; x)",
                    {{"l", l}, {"order", 4 * l + 1}});
    detail::run_points(rep, seed_for("okada-plus/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const auto x = draw_lifted<CycQ6>(rng, 2 * n + 1);
                         Point p;
                         p.add_all("x", x);
                         const auto head = without(x, {2 * n});
                         const CycQ6 zd = models_.dwbc_joined(l, a, view(head));
                         return detail::compare(models_.qt_odd(2 * l, a, view(x)), zd * zd * models_.ht_joined(l + 1, a, view(x)),
                                                p);
                       });
    out.push_back(std::move(rep));
  }
  {
    auto rep = make("special-value", "at a = zeta: Z_QT(4l-1; x) = Z(l; x)^2 Z_HT(2l-1; x \\ x_{2l})",
                    {{"l", l}, {"order", 4 * l - 1}});
    detail::run_points(rep, seed_for("okada-minus/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int) -> std::optional<Witness> {
                         const auto x = draw_lifted<CycQ6>(rng, 2 * n);
                         Point p;
                         p.add_all("x", x);
                         const CycQ6 zd = models_.dwbc_joined(l, a, view(x));
                         const auto head = without(x, {2 * n - 1});
                         return detail::compare(models_.qt_odd(2 * l - 1, a, view(x)),
                                                zd * zd * models_.ht_joined(l, a, view(head)), p);
                       });
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<IdentityReport> Suite::special_recursions(int l) const {
  std::vector<IdentityReport> out;
  const CycQ6 a = CycQ6::zeta();
  const std::string ls = std::to_string(l);
  {
    const auto pairs = ordered_pairs(2 * l);
    auto rep = make("special-value",
                    "at a = zeta: Z^(1)(l)|x_i=a x_j = prod_{k!=i,j} s^2(a x_k/x_j) Z^(1)(l-1; x \\ x_i, x_j)",
                    {{"l", l}});
    detail::run_points(rep, seed_for("z1-zeta/" + ls), std::max(options_.points, static_cast<int>(pairs.size())),
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                         const auto i = static_cast<std::size_t>(ii);
                         const auto j = static_cast<std::size_t>(jj);
                         auto x = draw_lifted<CycQ6>(rng, static_cast<std::size_t>(2 * l));
                         const CycQ6 target = a * x[j];
                         const CycQ6 lhs = through_interpolation(
                             [&](const CycQ6& t) { return z_r_qt(1, l, a, replaced(x, i, t)); }, target, 2 * l - 2, rng);
                         x[i] = target;
                         Point p;
                         p.add_all("x", x);
                         return detail::compare(lhs, special_product(a, x, i, j, 2) * z_r_qt(1, l - 1, a, without(x, {i, j})),
                                                p, pair_note(i, j));
                       });
    out.push_back(std::move(rep));
  }
  {
    const auto pairs = ordered_pairs(2 * l - 1);
    auto rep = make("special-value",
                    "at a = zeta: Zt(l)|x_i=a x_j = -prod_{k!=i,j} s^2(a x_k/x_j) Zt(l-1; x \\ x_i, x_j)", {{"l", l}});
    detail::run_points(rep, seed_for("zt-zeta/" + ls), std::max(options_.points, static_cast<int>(pairs.size())),
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                         const auto i = static_cast<std::size_t>(ii);
                         const auto j = static_cast<std::size_t>(jj);
                         auto x = draw_lifted<CycQ6>(rng, static_cast<std::size_t>(2 * l - 1));
                         const CycQ6 target = a * x[j];
                         const CycQ6 lhs = through_interpolation(
                             [&](const CycQ6& t) { return z_tilde(l, a, replaced(x, i, t)); }, target, 2 * l - 2, rng);
                         x[i] = target;
                         Point p;
                         p.add_all("x", x);
                         return detail::compare(lhs, -special_product(a, x, i, j, 2) * z_tilde(l - 1, a, without(x, {i, j})),
                                                p, pair_note(i, j));
                       });
    out.push_back(std::move(rep));
  }
  {
    const auto pairs = ordered_pairs(2 * l);
    auto rep = make("special-value",
                    "at a = zeta: Z(l; x)|x_i=a x_j = s(a^2) prod_{k!=i,j} s(a x_k/x_j) Z(l-1; x \\ x_i, x_j), "
                    "x_{l+k} = y_k",
                    {{"l", l}});
    detail::run_points(rep, seed_for("dwbc-zeta/" + ls), std::max(options_.points, static_cast<int>(pairs.size())),
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                         const auto i = static_cast<std::size_t>(ii);
                         const auto j = static_cast<std::size_t>(jj);
                         auto x = draw_lifted<CycQ6>(rng, static_cast<std::size_t>(2 * l));
                         x[i] = a * x[j];
                         Point p;
                         p.add_all("x", x);
                         const auto rest = without(x, {i, j});
                         return detail::compare(models_.dwbc_joined(l, a, view(x)),
                                                sigma(a * a) * special_product(a, x, i, j, 1) *
                                                    models_.dwbc_joined(l - 1, a, view(rest)),
                                                p, pair_note(i, j));
                       });
    out.push_back(std::move(rep));
  }
  {
    auto rep = make("special-value", "at a = zeta: Z_HT(2l-1; x) is symmetric in all 2l-1 variables", {{"l", l}});
    detail::run_points(rep, seed_for("htsym/" + ls), options_.points,
                       [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                         const auto x = draw_lifted<CycQ6>(rng, static_cast<std::size_t>(2 * l - 1));
                         auto y = x;
                         const auto k = static_cast<std::size_t>(idx) % (x.size() - 1);
                         std::swap(y[k], y[k + 1]);
                         Point p;
                         p.add_all("x", x);
                         return detail::compare(models_.ht_joined(l, a, view(x)), models_.ht_joined(l, a, view(y)), p,
                                                "transposition x" + std::to_string(k + 1) + " <-> x" + std::to_string(k + 2));
                       });
    out.push_back(std::move(rep));
  }
  return out;
}

IdentityReport Suite::ht_recursion(int l) const {
  const auto pairs = ordered_pairs(2 * l - 1);
  auto rep = make("dwbc-ht-recursions",
                  "at a = zeta: Z_HT(2l-1; x)|x_i=a x_j = s^2(a^2) prod_{k!=i,j} s^2(a x_k/x_j) Z_HT(2l-3; x \\ x_i, x_j)",
                  {{"l", l}});
  const CycQ6 a = CycQ6::zeta();
  detail::run_points(rep, seed_for("ht/" + std::to_string(l)), std::max(options_.points, static_cast<int>(pairs.size())),
                     [&](exact::PointSampler& rng, int idx) -> std::optional<Witness> {
                       const auto [ii, jj] = pairs[static_cast<std::size_t>(idx) % pairs.size()];
                       const auto i = static_cast<std::size_t>(ii);
                       const auto j = static_cast<std::size_t>(jj);
                       auto x = draw_lifted<CycQ6>(rng, static_cast<std::size_t>(2 * l - 1));
                       x[i] = a * x[j];
                       Point p;
                       p.add_all("x", x);
                       const auto rest = without(x, {i, j});
                       return detail::compare(models_.ht_joined(l, a, view(x)),
                                              power(sigma(a * a), 2) * special_product(a, x, i, j, 2) *
                                                  models_.ht_joined(l - 1, a, view(rest)),
                                              p, pair_note(i, j));
                     });
  return rep;
}

}  // namespace qtasm::identities
