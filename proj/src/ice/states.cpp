#include "qtasm/ice/states.hpp"

#include <string>

#include "qtasm/errors.hpp"

namespace qtasm::ice {

bool points_into(const IceGraph& g, int edge, int vertex, bool forward) {
  const Edge& e = g.edges()[static_cast<std::size_t>(edge)];
  return forward ? e.head == vertex : e.tail == vertex;
}

int configuration(const IceGraph& g, const IceState& s, int vertex) {
  const Vertex& v = g.vertices().at(static_cast<std::size_t>(vertex));
  if (v.kind != VertexKind::Tetravalent) throw ContractError("configuration of a bivalent vertex");
  int mask = 0;
  for (int k = 0; k < 4; ++k) {
    const int e = v.edges[static_cast<std::size_t>(k)];
    if (points_into(g, e, vertex, s.forward[static_cast<std::size_t>(e)])) mask |= 1 << k;
  }
  switch (mask) {
    case 0b0101:
      return 0;
    case 0b1010:
      return 1;
    case 0b0011:
      return 2;
    case 0b0110:
      return 3;
    case 0b1100:
      return 4;
    case 0b1001:
      return 5;
    default:
      throw DomainError("vertex " + std::to_string(vertex) + " violates the ice rule");
  }
}

bool satisfies_ice_rule(const IceGraph& g, const IceState& s) {
  if (s.forward.size() != g.edges().size()) return false;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& fixed = g.edges()[e].fixed_forward;
    if (fixed && *fixed != s.forward[e]) return false;
  }
  for (std::size_t vi = 0; vi < g.vertices().size(); ++vi) {
    const Vertex& v = g.vertices()[vi];
    int ins = 0;
    for (int k = 0; k < v.degree(); ++k) {
      const int e = v.edges[static_cast<std::size_t>(k)];
      ins += points_into(g, e, static_cast<int>(vi), s.forward[static_cast<std::size_t>(e)]) ? 1 : 0;
    }
    if (v.kind == VertexKind::Tetravalent ? ins != 2 : ins % 2 != 0) return false;
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const IceGraph& g, const std::function<bool(const IceState&)>& visit, std::uint64_t max_states)
      : g_(g), visit_(visit), max_states_(max_states), value_(g.edges().size(), -1) {}

  void run() {
    for (std::size_t e = 0; e < value_.size(); ++e) {
      const auto& fixed = g_.edges()[e].fixed_forward;
      if (fixed && !assign(static_cast<int>(e), *fixed)) return;
    }
    for (std::size_t v = 0; v < g_.vertices().size(); ++v) {
      if (!propagate(static_cast<int>(v))) return;
    }
    trail_.clear();
    descend(0);
  }

 private:
  // value: -1 unknown, 0 backward, 1 forward
  bool assign(int e, bool forward) {
    auto& slot = value_[static_cast<std::size_t>(e)];
    if (slot >= 0) return (slot == 1) == forward;
    slot = forward ? 1 : 0;
    trail_.push_back(e);
    const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
    for (int end : {ed.tail, ed.head}) {
      if (end != kOpenEnd && !propagate(end)) return false;
    }
    return true;
  }

  bool propagate(int vertex) {
    const Vertex& v = g_.vertices()[static_cast<std::size_t>(vertex)];
    const int deg = v.degree();
    int ins = 0;
    int outs = 0;
    for (int k = 0; k < deg; ++k) {
      const int e = v.edges[static_cast<std::size_t>(k)];
      const int val = value_[static_cast<std::size_t>(e)];
      if (val < 0) continue;
      if (points_into(g_, e, vertex, val == 1)) {
        ++ins;
      } else {
        ++outs;
      }
    }
    int force_in = -1;  // -1 nothing forced, 1 remaining edges in, 0 remaining edges out
    if (v.kind == VertexKind::Tetravalent) {
      if (ins > 2 || outs > 2) return false;
      if (ins == 2) force_in = 0;
      if (outs == 2) force_in = 1;
    } else {
      if (ins > 0 && outs > 0) return false;
      if (ins > 0) force_in = 1;
      if (outs > 0) force_in = 0;
    }
    if (force_in < 0 || ins + outs == deg) return true;
    for (int k = 0; k < deg; ++k) {
      const int e = v.edges[static_cast<std::size_t>(k)];
      if (value_[static_cast<std::size_t>(e)] >= 0) continue;
      const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
      const bool forward = (ed.head == vertex) == (force_in == 1);
      if (!assign(e, forward)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  bool descend(std::size_t from) {
    std::size_t e = from;
    while (e < value_.size() && value_[e] >= 0) ++e;
    if (e == value_.size()) return emit();
    for (bool forward : {true, false}) {
      const std::size_t mark = trail_.size();
      const bool ok = assign(static_cast<int>(e), forward);
      if (ok && !descend(e + 1)) return false;
      undo(mark);
    }
    return true;
  }

  bool emit() {
    if (++produced_ > max_states_) {
      throw BudgetExceeded("state enumeration exceeded max_states = " + std::to_string(max_states_));
    }
    IceState s;
    s.forward.resize(value_.size());
    for (std::size_t e = 0; e < value_.size(); ++e) s.forward[e] = value_[e] == 1;
    return visit_(s);
  }

  const IceGraph& g_;
  const std::function<bool(const IceState&)>& visit_;
  std::uint64_t max_states_;
  std::uint64_t produced_ = 0;
  std::vector<int> value_;
  std::vector<int> trail_;
};

}  // namespace

void for_each_state(const IceGraph& g, const std::function<bool(const IceState&)>& visit,
                    std::uint64_t max_states) {
  Search(g, visit, max_states).run();
}

std::vector<IceState> enumerate_states(const IceGraph& g, std::uint64_t max_states) {
  std::vector<IceState> out;
  for_each_state(
      g,
      [&](const IceState& s) {
        out.push_back(s);
        return true;
      },
      max_states);
  return out;
}

std::uint64_t count_states(const IceGraph& g, std::uint64_t max_states) {
  std::uint64_t n = 0;
  for_each_state(
      g,
      [&](const IceState&) {
        ++n;
        return true;
      },
      max_states);
  return n;
}

}  // namespace qtasm::ice
