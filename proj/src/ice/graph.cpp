#include "qtasm/ice/graph.hpp"

#include <algorithm>

#include "qtasm/errors.hpp"

namespace qtasm::ice {

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::Dwbc:
      return "dwbc";
    case Pattern::QtEven:
      return "qt-even";
    case Pattern::QtOdd:
      return "qt-odd";
    case Pattern::HtOdd:
      return "ht-odd";
    case Pattern::YangBaxterLeft:
      return "yb-left";
    case Pattern::YangBaxterRight:
      return "yb-right";
  }
  return "?";
}

Pattern parse_pattern(std::string_view text) {
  if (text == "dwbc") return Pattern::Dwbc;
  if (text == "qt-even") return Pattern::QtEven;
  if (text == "qt-odd") return Pattern::QtOdd;
  if (text == "ht-odd") return Pattern::HtOdd;
  throw ContractError("unknown pattern '" + std::string(text) +
                      "' (expected dwbc, qt-even, qt-odd, ht-odd)");
}

std::size_t IceGraph::tetravalent_count() const {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) {
    return v.kind == VertexKind::Tetravalent;
  }));
}

std::size_t IceGraph::bivalent_count() const { return vertices_.size() - tetravalent_count(); }

std::vector<int> IceGraph::open_terminals() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].is_boundary() && !edges_[e].fixed_forward) out.push_back(static_cast<int>(e));
  }
  return out;
}

int IceGraph::terminal(std::string_view name) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].terminal == name) return static_cast<int>(e);
  }
  throw ContractError("no terminal named '" + std::string(name) + "'");
}

IceGraph IceGraph::with_terminals(std::span<const std::pair<int, bool>> inward) const {
  IceGraph out = *this;
  for (const auto& [e, in] : inward) {
    auto& edge = out.edges_.at(static_cast<std::size_t>(e));
    if (!edge.is_boundary()) throw ContractError("only boundary edges can be fixed");
    // inward means the open end is the tail
    edge.fixed_forward = (edge.tail == kOpenEnd) == in;
  }
  return out;
}

void IceGraph::validate() const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    for (int s = 0; s < 4; ++s) {
      const bool used = vx.edges[static_cast<std::size_t>(s)] >= 0;
      if (used != (s < vx.degree())) {
        throw ContractError("vertex " + std::to_string(v) + " has a malformed slot " + std::to_string(s));
      }
    }
    if (vx.kind == VertexKind::Tetravalent && vx.label.size() != variables_.size()) {
      throw ContractError("vertex " + std::to_string(v) + " label has wrong length");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.tail == kOpenEnd && ed.head == kOpenEnd) {
      throw ContractError("edge " + std::to_string(e) + " touches no vertex");
    }
    for (int end : {ed.tail, ed.head}) {
      if (end == kOpenEnd) continue;
      const auto& slots = vertices_.at(static_cast<std::size_t>(end)).edges;
      if (std::find(slots.begin(), slots.end(), static_cast<int>(e)) == slots.end()) {
        throw ContractError("edge " + std::to_string(e) + " is not registered at its endpoint");
      }
    }
  }
}

int IceGraph::add_tetravalent(std::vector<int> label) {
  Vertex v;
  v.kind = VertexKind::Tetravalent;
  v.label = std::move(label);
  vertices_.push_back(std::move(v));
  return static_cast<int>(vertices_.size() - 1);
}

int IceGraph::add_crossing(const std::array<int, 4>& slot_params) {
  std::vector<int> label(variables_.size(), 0);
  label.at(static_cast<std::size_t>(slot_params[0])) += 1;
  label.at(static_cast<std::size_t>(slot_params[1])) -= 1;
  return add_tetravalent(std::move(label));
}

int IceGraph::add_bivalent() {
  Vertex v;
  v.kind = VertexKind::Bivalent;
  vertices_.push_back(std::move(v));
  return static_cast<int>(vertices_.size() - 1);
}

int IceGraph::connect(int v1, int slot1, int v2, int slot2) {
  const int e = static_cast<int>(edges_.size());
  edges_.push_back(Edge{v1, v2, std::nullopt, {}});
  auto& s1 = vertices_.at(static_cast<std::size_t>(v1)).edges.at(static_cast<std::size_t>(slot1));
  auto& s2 = vertices_.at(static_cast<std::size_t>(v2)).edges.at(static_cast<std::size_t>(slot2));
  if (s1 >= 0 || s2 >= 0) throw ContractError("vertex slot already connected");
  s1 = e;
  s2 = e;
  return e;
}

int IceGraph::add_boundary(int v, int slot, std::optional<bool> inward, std::string terminal) {
  const int e = static_cast<int>(edges_.size());
  Edge edge{kOpenEnd, v, std::nullopt, std::move(terminal)};
  if (inward) edge.fixed_forward = *inward;  // open end is the tail
  edges_.push_back(std::move(edge));
  auto& s = vertices_.at(static_cast<std::size_t>(v)).edges.at(static_cast<std::size_t>(slot));
  if (s >= 0) throw ContractError("vertex slot already connected");
  s = e;
  return e;
}

}  // namespace qtasm::ice
