#include <map>
#include <string>
#include <utility>

#include "qtasm/errors.hpp"
#include "qtasm/ice/graph.hpp"

namespace qtasm::ice {

namespace {

constexpr int kE = 0;
constexpr int kN = 1;
constexpr int kW = 2;
constexpr int kS = 3;

std::vector<std::string> names(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

using Grid = std::map<std::pair<int, int>, int>;

// Square grid with vertex (r, c) carrying row parameter row(r) on E/W and
// column parameter col(c) on N/S. Rows and columns are 1-based; row 1 is at
// the bottom.
template <class RowParam, class ColParam>
Grid crossings(IceGraph& g, int rows, int cols, RowParam row, ColParam col) {
  Grid v;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      v[{r, c}] = g.add_crossing({row(r), col(c), row(r), col(c)});
    }
  }
  return v;
}

void link_rows(IceGraph& g, Grid& v, int rows, int cols) {
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c < cols; ++c) g.connect(v[{r, c}], kE, v[{r, c + 1}], kW);
  }
}

void link_cols(IceGraph& g, Grid& v, int rows, int cols) {
  for (int c = 1; c <= cols; ++c) {
    for (int r = 1; r < rows; ++r) g.connect(v[{r, c}], kN, v[{r + 1, c}], kS);
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ContractError(message);
}

IceGraph dwbc(int n) {
  require(n >= 1, "dwbc needs order n >= 1");
  IceGraph g(Pattern::Dwbc, n, concat(names("x", n), names("y", n)));
  auto v = crossings(g, n, n, [](int r) { return r - 1; }, [n](int c) { return n + c - 1; });
  for (int r = 1; r <= n; ++r) {
    g.add_boundary(v[{r, 1}], kW, true);
    g.add_boundary(v[{r, n}], kE, true);
  }
  for (int c = 1; c <= n; ++c) {
    g.add_boundary(v[{1, c}], kS, false);
    g.add_boundary(v[{n, c}], kN, false);
  }
  link_rows(g, v, n, n);
  link_cols(g, v, n, n);
  return g;
}

// Fold line: the east end of row i meets the north end of column i through
// a bivalent vertex.
void fold(IceGraph& g, Grid& v, int size, int cols) {
  for (int i = 1; i <= size; ++i) {
    const int b = g.add_bivalent();
    g.connect(v[{i, cols}], kE, b, 0);
    g.connect(b, 1, v[{size, i}], kN);
  }
}

IceGraph qt_even(int n) {
  require(n >= 4 && n % 4 == 0, "qt-even needs order n = 4l with l >= 1 (n divisible by 4)");
  const int s = n / 2;
  IceGraph g(Pattern::QtEven, n, names("x", s));
  auto idx = [](int k) { return k - 1; };
  auto v = crossings(g, s, s, idx, idx);
  for (int r = 1; r <= s; ++r) g.add_boundary(v[{r, 1}], kW, true);
  for (int c = 1; c <= s; ++c) g.add_boundary(v[{1, c}], kS, false);
  link_rows(g, v, s, s);
  link_cols(g, v, s, s);
  fold(g, v, s, s);
  return g;
}

IceGraph qt_odd(int n) {
  require(n >= 1 && n % 2 == 1, "qt-odd needs odd order n = 2m+1 with m >= 0");
  const int m = (n - 1) / 2;
  IceGraph g(Pattern::QtOdd, n, names("x", m + 1));
  if (m == 0) return g;
  auto idx = [](int k) { return k - 1; };
  auto v = crossings(g, m, m + 1, idx, idx);
  for (int r = 1; r <= m; ++r) g.add_boundary(v[{r, 1}], kW, true);
  for (int c = 1; c <= m + 1; ++c) g.add_boundary(v[{1, c}], kS, false);
  // central entry of the matrix is -1 for odd m and +1 for even m
  g.add_boundary(v[{m, m + 1}], kN, m % 2 == 0);
  link_rows(g, v, m, m + 1);
  link_cols(g, v, m, m + 1);
  fold(g, v, m, m + 1);
  return g;
}

IceGraph ht_odd(int n) {
  require(n >= 1 && n % 2 == 1, "ht-odd needs odd order n = 2l-1 with l >= 1");
  const int l = (n + 1) / 2;
  IceGraph g(Pattern::HtOdd, n, concat(names("x", l), names("y", l)));
  if (l == 1) return g;
  const int rows = 2 * l - 1;
  auto row = [l](int r) { return (r <= l ? r : 2 * l - r) - 1; };
  auto col = [l](int c) { return l + c - 1; };
  auto v = crossings(g, rows, l - 1, row, col);
  std::map<int, int> mid;
  for (int r = 1; r < l; ++r) mid[r] = g.add_crossing({r - 1, 2 * l - 1, r - 1, 2 * l - 1});
  for (int r = 1; r <= rows; ++r) g.add_boundary(v[{r, 1}], kW, true);
  link_rows(g, v, rows, l - 1);
  for (int r = 1; r < l; ++r) {
    g.connect(v[{r, l - 1}], kE, mid[r], kW);
    g.connect(mid[r], kE, v[{2 * l - r, l - 1}], kE);
  }
  g.connect(v[{l, l - 1}], kE, mid[l - 1], kN);
  for (int r = 2; r < l; ++r) g.connect(mid[r], kS, mid[r - 1], kN);
  g.add_boundary(mid[1], kS, false);
  for (int c = 1; c < l; ++c) {
    g.add_boundary(v[{1, c}], kS, false);
    g.add_boundary(v[{rows, c}], kN, false);
  }
  link_cols(g, v, rows, l - 1);
  return g;
}

std::vector<int> label_of(int var, int corner) {
  std::vector<int> label(3, 0);
  label[static_cast<std::size_t>(var)] = corner % 2 == 0 ? 1 : -1;
  return label;
}

}  // namespace

IceGraph build_pattern(Pattern pattern, int order) {
  IceGraph g = [&] {
    switch (pattern) {
      case Pattern::Dwbc:
        return dwbc(order);
      case Pattern::QtEven:
        return qt_even(order);
      case Pattern::QtOdd:
        return qt_odd(order);
      case Pattern::HtOdd:
        return ht_odd(order);
      default:
        throw ContractError("build_pattern: use yang_baxter_graphs for the Yang-Baxter sides");
    }
  }();
  g.validate();
  return g;
}

std::pair<IceGraph, IceGraph> yang_baxter_graphs() {
  const std::vector<std::string> vars{"x", "y", "z"};
  constexpr int x = 0;
  constexpr int y = 1;
  constexpr int z = 2;

  IceGraph left(Pattern::YangBaxterLeft, 3, vars);
  const int v1 = left.add_tetravalent(label_of(z, 1));
  const int v3 = left.add_tetravalent(label_of(y, 0));
  const int v2 = left.add_tetravalent(label_of(x, 2));
  left.connect(v1, 0, v3, 2);
  left.connect(v1, 3, v2, 1);
  left.connect(v2, 0, v3, 3);
  left.add_boundary(v1, 2, std::nullopt, "A");
  left.add_boundary(v1, 1, std::nullopt, "B");
  left.add_boundary(v3, 1, std::nullopt, "C");
  left.add_boundary(v3, 0, std::nullopt, "D");
  left.add_boundary(v2, 3, std::nullopt, "E");
  left.add_boundary(v2, 2, std::nullopt, "F");

  IceGraph right(Pattern::YangBaxterRight, 3, vars);
  const int w1 = right.add_tetravalent(label_of(z, 3));
  const int w3 = right.add_tetravalent(label_of(x, 0));
  const int w2 = right.add_tetravalent(label_of(y, 2));
  right.connect(w1, 1, w3, 3);
  right.connect(w1, 2, w2, 0);
  right.connect(w2, 1, w3, 2);
  right.add_boundary(w2, 2, std::nullopt, "A");
  right.add_boundary(w3, 1, std::nullopt, "B");
  right.add_boundary(w3, 0, std::nullopt, "C");
  right.add_boundary(w1, 0, std::nullopt, "D");
  right.add_boundary(w1, 3, std::nullopt, "E");
  right.add_boundary(w2, 3, std::nullopt, "F");

  left.validate();
  right.validate();
  return {std::move(left), std::move(right)};
}

}  // namespace qtasm::ice
