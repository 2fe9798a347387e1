#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtasm/ice/graph.hpp"

namespace qtasm::ice {

/// forward[e] is true when edge e points from its tail to its head.
struct IceState {
  std::vector<bool> forward;

  bool operator==(const IceState&) const = default;
};

inline constexpr std::uint64_t kDefaultMaxStates = 5'000'000;

[[nodiscard]] bool points_into(const IceGraph& g, int edge, int vertex, bool forward);

/// In/out configuration of a tetravalent vertex:
///   0: in at slots {0,2}   1: in at {1,3}
///   2: in at {0,1}   3: {1,2}   4: {2,3}   5: {3,0}
/// Configurations 2..5 have both in-edges around corner (config - 2).
[[nodiscard]] int configuration(const IceGraph& g, const IceState& s, int vertex);

[[nodiscard]] bool satisfies_ice_rule(const IceGraph& g, const IceState& s);

/// Depth-first over edges in construction order with propagation at vertices
/// whose remaining edges are forced. Visitation order is deterministic.
/// Returning false from `visit` stops the search. Throws BudgetExceeded once
/// more than `max_states` states are produced.
void for_each_state(const IceGraph& g, const std::function<bool(const IceState&)>& visit,
                    std::uint64_t max_states = kDefaultMaxStates);

[[nodiscard]] std::vector<IceState> enumerate_states(const IceGraph& g,
                                                     std::uint64_t max_states = kDefaultMaxStates);
[[nodiscard]] std::uint64_t count_states(const IceGraph& g, std::uint64_t max_states = kDefaultMaxStates);

}  // namespace qtasm::ice
