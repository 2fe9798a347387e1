#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtasm/errors.hpp"

namespace qtasm::altsign {

enum class SymmetryClass { All, HalfTurn, QuarterTurn };

std::string_view to_string(SymmetryClass cls);
SymmetryClass parse_symmetry_class(std::string_view text);

using IntMatrix = std::vector<std::vector<int>>;

/// First violated alternating-sign condition, 0-based location.
struct AsmViolation {
  std::string condition;
  int row = -1;
  int col = -1;

  [[nodiscard]] std::string message() const;
};

class InvalidAsm : public ContractError {
 public:
  explicit InvalidAsm(AsmViolation v) : ContractError(v.message()), violation_(std::move(v)) {}
  [[nodiscard]] const AsmViolation& violation() const { return violation_; }

 private:
  AsmViolation violation_;
};

std::optional<AsmViolation> find_violation(const IntMatrix& m);

/// Square {-1,0,1} matrix whose rows and columns have partial sums in
/// {0,1} and total 1. Only constructible through validation.
class AsmMatrix {
 public:
  static AsmMatrix validate(const IntMatrix& m);
  /// Parses rows written as "+-0" strings joined by '/'.
  static AsmMatrix parse_compact(std::string_view text);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * order_ + col)];
  }
  [[nodiscard]] IntMatrix rows() const;
  [[nodiscard]] std::string compact() const;
  [[nodiscard]] bool has_symmetry(SymmetryClass cls) const;
  [[nodiscard]] AsmMatrix rotated_quarter_turn() const;

  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;
  friend auto operator<=>(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  AsmMatrix(int order, std::vector<std::int8_t> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order_ = 0;
  std::vector<std::int8_t> entries_;

};

bool satisfies_symmetry(const IntMatrix& m, SymmetryClass cls);

enum class SearchStrategy {
  /// Row-major backtracking over running row/column sums. For HT and QT the
  /// free choices are restricted to orbit representatives (a fundamental
  /// domain) and every other cell is forced by the symmetry.
  Backtracking,
  /// Backtracking over all ASMs of the order, kept if symmetric.
  Filter,
  /// Monotone triangles with bottom row 1..n, converted to matrices.
  MonotoneTriangle,
};

/// Largest order each search is allowed to attempt.
struct SearchBounds {
  int max_order_all = 8;
  int max_order_half_turn = 10;
  int max_order_quarter_turn = 13;
};

/// Streams every matrix of the class exactly once; `visit` returns false to
/// stop early. Throws BudgetExceeded if n is beyond the configured bound.
void for_each_asm(int n, SymmetryClass cls, const std::function<bool(const AsmMatrix&)>& visit,
                  SearchStrategy strategy = SearchStrategy::Backtracking,
                  const SearchBounds& bounds = {});

std::vector<AsmMatrix> enumerate(int n, SymmetryClass cls,
                                 SearchStrategy strategy = SearchStrategy::Backtracking,
                                 const SearchBounds& bounds = {});

std::uint64_t count(int n, SymmetryClass cls,
                    SearchStrategy strategy = SearchStrategy::Backtracking,
                    const SearchBounds& bounds = {});

/// Center entry of a quarter-turn symmetric matrix of order 2m+1; -1 when m
/// is odd, +1 when m is even (checked, not assumed).
int center_entry(const AsmMatrix& m);

}  // namespace qtasm::altsign
