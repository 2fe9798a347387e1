#include "qtasm/altsign/asm.hpp"

#include <algorithm>
#include <numeric>

namespace qtasm::altsign {

std::string_view to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::All:
      return "all";
    case SymmetryClass::HalfTurn:
      return "ht";
    case SymmetryClass::QuarterTurn:
      return "qt";
  }
  return "?";
}

SymmetryClass parse_symmetry_class(std::string_view text) {
  if (text == "all" || text == "ALL") return SymmetryClass::All;
  if (text == "ht" || text == "HT") return SymmetryClass::HalfTurn;
  if (text == "qt" || text == "QT") return SymmetryClass::QuarterTurn;
  throw ContractError("unknown symmetry class '" + std::string(text) + "' (expected all, ht, qt)");
}

std::string AsmViolation::message() const {
  return condition + " at (" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

std::optional<AsmViolation> find_violation(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return AsmViolation{"empty matrix", 0, 0};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n) {
      return AsmViolation{"matrix is not square", i, 0};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < -1 || v > 1) return AsmViolation{"entry outside {-1,0,1}", i, j};
    }
  }
  // partial sums in {0,1} along each line <=> nonzeros alternate starting with +1
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) {
      s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (s < 0 || s > 1) return AsmViolation{"row signs do not alternate from +1", i, j};
    }
    if (s != 1) return AsmViolation{"row sum is not 1", i, n - 1};
  }
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (s < 0 || s > 1) return AsmViolation{"column signs do not alternate from +1", i, j};
    }
    if (s != 1) return AsmViolation{"column sum is not 1", n - 1, j};
  }
  return std::nullopt;
}

AsmMatrix AsmMatrix::validate(const IntMatrix& m) {
  if (auto v = find_violation(m)) throw InvalidAsm(*v);
  const int n = static_cast<int>(m.size());
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : m) {
    for (int v : row) entries.push_back(static_cast<std::int8_t>(v));
  }
  return AsmMatrix(n, std::move(entries));
}

AsmMatrix AsmMatrix::parse_compact(std::string_view text) {
  IntMatrix m(1);
  for (char ch : text) {
    switch (ch) {
      case '/':
        m.emplace_back();
        break;
      case '+':
        m.back().push_back(1);
        break;
      case '-':
        m.back().push_back(-1);
        break;
      case '0':
        m.back().push_back(0);
        break;
      default:
        throw ContractError(std::string("unexpected character '") + ch + "' in compact matrix");
    }
  }
  return validate(m);
}

IntMatrix AsmMatrix::rows() const {
  IntMatrix out(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  }
  return out;
}

std::string AsmMatrix::compact() const {
  std::string out;
  for (int i = 0; i < order_; ++i) {
    if (i > 0) out += '/';
    for (int j = 0; j < order_; ++j) {
      const int v = at(i, j);
      out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    }
  }
  return out;
}

bool satisfies_symmetry(const IntMatrix& m, SymmetryClass cls) {
  const int n = static_cast<int>(m.size());
  auto get = [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      switch (cls) {
        case SymmetryClass::All:
          break;
        case SymmetryClass::HalfTurn:
          if (get(n - 1 - i, n - 1 - j) != get(i, j)) return false;
          break;
        case SymmetryClass::QuarterTurn:
          // (A)_{j, n+1-i} = (A)_{ij}, 1-based
          if (get(j, n - 1 - i) != get(i, j)) return false;
          break;
      }
    }
  }
  return true;
}

bool AsmMatrix::has_symmetry(SymmetryClass cls) const { return satisfies_symmetry(rows(), cls); }

AsmMatrix AsmMatrix::rotated_quarter_turn() const {
  std::vector<std::int8_t> out(entries_.size());
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      out[static_cast<std::size_t>(j * order_ + (order_ - 1 - i))] = static_cast<std::int8_t>(at(i, j));
    }
  }
  return AsmMatrix(order_, std::move(out));
}

namespace {

int bound_for(SymmetryClass cls, const SearchBounds& b) {
  switch (cls) {
    case SymmetryClass::All:
      return b.max_order_all;
    case SymmetryClass::HalfTurn:
      return b.max_order_half_turn;
    case SymmetryClass::QuarterTurn:
      return b.max_order_quarter_turn;
  }
  return 0;
}

/// Smallest row-major index in the symmetry orbit of each cell.
std::vector<int> orbit_representatives(int n, SymmetryClass cls) {
  std::vector<int> rep(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int best = i * n + j;
      int ci = i;
      int cj = j;
      const int steps = cls == SymmetryClass::QuarterTurn ? 3 : (cls == SymmetryClass::HalfTurn ? 1 : 0);
      for (int s = 0; s < steps; ++s) {
        if (cls == SymmetryClass::QuarterTurn) {
          const int ni = cj;
          const int nj = n - 1 - ci;
          ci = ni;
          cj = nj;
        } else {
          ci = n - 1 - ci;
          cj = n - 1 - cj;
        }
        best = std::min(best, ci * n + cj);
      }
      rep[static_cast<std::size_t>(i * n + j)] = best;
    }
  }
  return rep;
}

class CellSearch {
 public:
  CellSearch(int n, SymmetryClass cls, const std::function<bool(const AsmMatrix&)>& visit)
      : n_(n),
        rep_(orbit_representatives(n, cls)),
        grid_(static_cast<std::size_t>(n * n), 0),
        colsum_(static_cast<std::size_t>(n), 0),
        visit_(visit) {}

  void run() { step(0, 0); }

 private:
  // returns false once the visitor asked to stop
  bool step(int cell, int rowsum) {
    if (cell == n_ * n_) {
      for (int s : colsum_) {
        if (s != 1) return true;
      }
      IntMatrix m(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
      for (int k = 0; k < n_ * n_; ++k) {
        m[static_cast<std::size_t>(k / n_)][static_cast<std::size_t>(k % n_)] = grid_[static_cast<std::size_t>(k)];
      }
      return visit_(AsmMatrix::validate(m));
    }
    const int i = cell / n_;
    const int j = cell % n_;
    const auto uj = static_cast<std::size_t>(j);
    const int rep = rep_[static_cast<std::size_t>(cell)];
    const int remaining_rows = n_ - 1 - i;
    for (int v = -1; v <= 1; ++v) {
      if (rep < cell && grid_[static_cast<std::size_t>(rep)] != v) continue;
      const int rs = rowsum + v;
      const int cs = colsum_[uj] + v;
      if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
      if (j == n_ - 1 && rs != 1) continue;
      if (cs == 0 && remaining_rows == 0) continue;
      grid_[static_cast<std::size_t>(cell)] = v;
      colsum_[uj] = cs;
      const bool keep_going = step(cell + 1, j == n_ - 1 ? 0 : rs);
      colsum_[uj] -= v;
      grid_[static_cast<std::size_t>(cell)] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> rep_;
  std::vector<int> grid_;
  std::vector<int> colsum_;
  const std::function<bool(const AsmMatrix&)>& visit_;
};

/// Monotone triangles built from the bottom row (1..n) upward; row k of the
/// triangle lists the columns whose partial column sum over the first k
/// matrix rows is 1.
class TriangleSearch {
 public:
  TriangleSearch(int n, const std::function<bool(const AsmMatrix&)>& visit)
      : n_(n), rows_(static_cast<std::size_t>(n + 1)), visit_(visit) {}

  void run() {
    auto& bottom = rows_[static_cast<std::size_t>(n_)];
    bottom.resize(static_cast<std::size_t>(n_));
    std::iota(bottom.begin(), bottom.end(), 0);
    level(n_ - 1);
  }

 private:
  bool level(int k) {
    if (k == 0) return emit();
    auto& row = rows_[static_cast<std::size_t>(k)];
    row.assign(static_cast<std::size_t>(k), 0);
    return fill(k, 0);
  }

  bool fill(int k, int j) {
    const auto& below = rows_[static_cast<std::size_t>(k + 1)];
    auto& row = rows_[static_cast<std::size_t>(k)];
    if (j == k) return level(k - 1);
    const int lo = std::max(below[static_cast<std::size_t>(j)], j > 0 ? row[static_cast<std::size_t>(j - 1)] + 1 : 0);
    const int hi = below[static_cast<std::size_t>(j + 1)];
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(j)] = v;
      if (!fill(k, j + 1)) return false;
    }
    return true;
  }

  bool emit() {
    IntMatrix m(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int k = 1; k <= n_; ++k) {
      for (int c : rows_[static_cast<std::size_t>(k)]) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)] += 1;
      if (k >= 2) {
        for (int c : rows_[static_cast<std::size_t>(k - 1)]) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)] -= 1;
      }
    }
    return visit_(AsmMatrix::validate(m));
  }

  int n_;
  std::vector<std::vector<int>> rows_;
  const std::function<bool(const AsmMatrix&)>& visit_;
};

}  // namespace

void for_each_asm(int n, SymmetryClass cls, const std::function<bool(const AsmMatrix&)>& visit,
                  SearchStrategy strategy, const SearchBounds& bounds) {
  if (n < 1) throw ContractError("matrix order must be at least 1");
  if (cls == SymmetryClass::QuarterTurn && n % 2 == 0 && n % 4 != 0) {
    throw ContractError("quarter-turn symmetric matrices of even order n need n divisible by 4 (got " +
                        std::to_string(n) + ")");
  }
  const bool full_search = strategy != SearchStrategy::Backtracking || cls == SymmetryClass::All;
  const int limit = full_search ? bounds.max_order_all : bound_for(cls, bounds);
  if (n > limit) {
    throw BudgetExceeded("order " + std::to_string(n) + " exceeds the search bound " +
                         std::to_string(limit) + " for class " + std::string(to_string(cls)));
  }
  const std::function<bool(const AsmMatrix&)> filtered = [&](const AsmMatrix& m) {
    return m.has_symmetry(cls) ? visit(m) : true;
  };
  switch (strategy) {
    case SearchStrategy::Backtracking:
      CellSearch(n, cls, visit).run();
      break;
    case SearchStrategy::Filter:
      CellSearch(n, SymmetryClass::All, filtered).run();
      break;
    case SearchStrategy::MonotoneTriangle:
      TriangleSearch(n, filtered).run();
      break;
  }
}

std::vector<AsmMatrix> enumerate(int n, SymmetryClass cls, SearchStrategy strategy,
                                 const SearchBounds& bounds) {
  std::vector<AsmMatrix> out;
  for_each_asm(
      n, cls,
      [&](const AsmMatrix& m) {
        out.push_back(m);
        return true;
      },
      strategy, bounds);
  return out;
}

std::uint64_t count(int n, SymmetryClass cls, SearchStrategy strategy, const SearchBounds& bounds) {
  std::uint64_t total = 0;
  for_each_asm(
      n, cls,
      [&](const AsmMatrix&) {
        ++total;
        return true;
      },
      strategy, bounds);
  return total;
}

int center_entry(const AsmMatrix& m) {
  const int n = m.order();
  if (n % 2 == 0) throw ContractError("center entry needs odd order");
  if (!m.has_symmetry(SymmetryClass::QuarterTurn)) {
    throw ContractError("center entry rule applies to quarter-turn symmetric matrices");
  }
  const int half = n / 2;
  const int c = m.at(half, half);
  const int expected = (half % 2 == 1) ? -1 : 1;
  if (c != expected) throw std::logic_error("quarter-turn center parity rule violated");
  return c;
}

}  // namespace qtasm::altsign
