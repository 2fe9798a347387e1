#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtasm/errors.hpp"
#include "qtasm/exact/field.hpp"
#include "qtasm/exact/interpolate.hpp"
#include "qtasm/exact/sampling.hpp"
#include "qtasm/identities/report.hpp"

namespace qtasm::identities::detail {

using exact::CycQ6;
using exact::Rational;

template <class T>
std::span<const T> view(const std::vector<T>& v) {
  return std::span<const T>(v);
}

/// Random rational with r^2 != 1, so sigma(r) is invertible.
inline Rational draw(exact::PointSampler& rng) {
  for (;;) {
    Rational r = rng.next();
    if (!(r * r == Rational(1))) return r;
  }
}

template <class T = Rational>
std::vector<T> draw_vector(exact::PointSampler& rng, std::size_t n) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(draw(rng));
  return out;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::initializer_list<std::size_t> drop) {
  std::vector<T> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (std::find(drop.begin(), drop.end(), k) == drop.end()) out.push_back(v[k]);
  }
  return out;
}

template <class T>
std::vector<T> replaced(std::vector<T> v, std::size_t at, T value) {
  v[at] = std::move(value);
  return v;
}

class Point {
 public:
  template <class T>
  Point& add(std::string name, const T& v) {
    values_.emplace_back(std::move(name), v.str());
    return *this;
  }
  template <class T>
  Point& add_all(const std::string& prefix, const std::vector<T>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) add(prefix + std::to_string(k + 1), v[k]);
    return *this;
  }
  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }

 private:
  std::vector<std::pair<std::string, std::string>> values_;
};

template <class T>
std::optional<Witness> compare(const T& lhs, const T& rhs, const Point& p, std::string note = {}) {
  if (lhs == rhs) return std::nullopt;
  return Witness{p.values(), lhs.str(), rhs.str(), std::move(note)};
}

using Trial = std::function<std::optional<Witness>(exact::PointSampler&, int)>;

/// Runs `points` trials; a SingularPoint thrown by a trial discards the draw
/// and redraws. Stops at the first failure.
void run_points(IdentityReport& report, std::uint64_t seed, int points, const Trial& trial);

/// Value at `target` of a centered Laurent polynomial of the given width,
/// known only through `f` at generic points; two samples beyond the minimum
/// confirm the width.
template <class T, class F>
T through_interpolation(F f, const T& target, int width, exact::PointSampler& rng) {
  const auto shape = exact::CenteredParity::of_width(width);
  const std::size_t wanted = static_cast<std::size_t>(shape.coefficient_count() + 2);
  std::vector<std::pair<T, T>> samples;
  const T target_sq = target * target;
  int singular = 0;
  for (int attempt = 0; samples.size() < wanted; ++attempt) {
    // persistent singularity comes from the fixed coordinates, not from t
    if (singular > 50) throw SingularPoint("fixed coordinates are not generic");
    if (attempt > 1000) throw InterpolationError("no generic interpolation points found");
    const T t(draw(rng));
    const T t_sq = t * t;
    bool clash = t_sq == target_sq;
    for (const auto& s : samples) clash = clash || s.first * s.first == t_sq;
    if (clash) continue;
    try {
      samples.emplace_back(t, f(t));
    } catch (const SingularPoint&) {
      ++singular;
    }
  }
  return exact::interpolate_centered(samples, shape)(target);
}

}  // namespace qtasm::identities::detail
