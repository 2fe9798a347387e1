#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtasm/exact/rational.hpp"

namespace qtasm::exact {

/// Seeded source of small positive rationals p/q, 1 <= p, q <= bound.
/// The mapping from engine output to (p, q) is plain modular reduction so
/// sequences are identical across standard libraries.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, int bound = 50) : engine_(seed), bound_(bound) {}

  Rational next() {
    const auto p = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound_)) + 1;
    const auto q = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound_)) + 1;
    return Rational(p, q);
  }

  std::vector<Rational> next_vector(std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
  }

  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  int bound_;
};

}  // namespace qtasm::exact
