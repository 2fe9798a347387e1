#include "harness.hpp"

namespace qtasm::identities::detail {

void run_points(IdentityReport& report, std::uint64_t seed, int points, const Trial& trial) {
  report.mode = CheckMode::RandomPoint;
  exact::PointSampler rng(seed);
  constexpr int kMaxRedraws = 200;
  for (int idx = 0; idx < points; ++idx) {
    std::optional<Witness> w;
    bool done = false;
    for (int attempt = 0; attempt < kMaxRedraws && !done; ++attempt) {
      try {
        w = trial(rng, idx);
        done = true;
      } catch (const SingularPoint&) {
      } catch (const InterpolationError& e) {
        w = Witness{{}, "", "", std::string("interpolation failed: ") + e.what()};
        done = true;
      }
    }
    if (!done) w = Witness{{}, "", "", "no generic point found after repeated draws"};
    if (w) {
      report.passed = false;
      report.points_tested = idx + 1;
      report.witness = std::move(w);
      return;
    }
  }
  report.passed = true;
  report.points_tested = points;
}

}  // namespace qtasm::identities::detail
