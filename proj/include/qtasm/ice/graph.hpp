#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtasm::ice {

/// The four square-ice patterns, plus the two sides of the Yang-Baxter
/// equation used for calibration.
enum class Pattern { Dwbc, QtEven, QtOdd, HtOdd, YangBaxterLeft, YangBaxterRight };

std::string_view to_string(Pattern p);
/// Accepts "dwbc", "qt-even", "qt-odd", "ht-odd".
Pattern parse_pattern(std::string_view text);

enum class VertexKind { Tetravalent, Bivalent };

inline constexpr int kOpenEnd = -1;

/// Edge slots are listed counterclockwise; for grid vertices the order is
/// east, north, west, south. `label` is the exponent vector (over the graph
/// variables) of the spectral label sitting in corner 0, between slot 0 and
/// slot 1. Adjacent corners carry the inverse label.
struct Vertex {
  VertexKind kind = VertexKind::Tetravalent;
  std::array<int, 4> edges{-1, -1, -1, -1};
  std::vector<int> label;

  [[nodiscard]] int degree() const { return kind == VertexKind::Tetravalent ? 4 : 2; }
};

/// `forward` orientation means tail -> head. Open ends are kOpenEnd; a
/// boundary edge either has a fixed orientation or a terminal name.
struct Edge {
  int tail = kOpenEnd;
  int head = kOpenEnd;
  std::optional<bool> fixed_forward;
  std::string terminal;

  [[nodiscard]] bool is_boundary() const { return tail == kOpenEnd || head == kOpenEnd; }
};

class IceGraph {
 public:
  IceGraph(Pattern pattern, int order, std::vector<std::string> variables)
      : pattern_(pattern), order_(order), variables_(std::move(variables)) {}

  [[nodiscard]] Pattern pattern() const { return pattern_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  [[nodiscard]] std::size_t tetravalent_count() const;
  [[nodiscard]] std::size_t bivalent_count() const;
  /// Boundary edges with no fixed orientation, in construction order.
  [[nodiscard]] std::vector<int> open_terminals() const;
  [[nodiscard]] int terminal(std::string_view name) const;

  /// Copy with the named terminals fixed; `inward` means pointing into the graph.
  [[nodiscard]] IceGraph with_terminals(std::span<const std::pair<int, bool>> inward) const;

  /// Structural checks: slot counts, endpoints, label lengths.
  void validate() const;

  // builder interface
  int add_tetravalent(std::vector<int> label);
  /// Label from the crossing rule: corner 0 gets param(slot 0) / param(slot 1).
  int add_crossing(const std::array<int, 4>& slot_params);
  int add_bivalent();
  int connect(int v1, int slot1, int v2, int slot2);
  int add_boundary(int v, int slot, std::optional<bool> inward, std::string terminal = {});

 private:
  Pattern pattern_;
  int order_;
  std::vector<std::string> variables_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Builds one of the four lattice patterns.
///   Dwbc:   order n, variables x1..xn, y1..yn
///   QtEven: order 4l, variables x1..x2l
///   QtOdd:  order 2m+1 (m >= 0), variables x1..x(m+1); x(m+1) is the middle line
///   HtOdd:  order 2l-1, variables x1..xl, y1..yl
/// Throws ContractError naming the divisibility rule on a bad order.
IceGraph build_pattern(Pattern pattern, int order);

/// Both sides of the Yang-Baxter equation with vertex labels x, y, z
/// (graph variables "x", "y", "z") and six open terminals "A".."F" that
/// correspond between the two graphs.
std::pair<IceGraph, IceGraph> yang_baxter_graphs();

inline constexpr std::array<std::string_view, 6> kYangBaxterTerminals{"A", "B", "C", "D", "E", "F"};

}  // namespace qtasm::ice
