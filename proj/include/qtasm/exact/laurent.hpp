#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtasm/errors.hpp"

namespace qtasm::exact {

using VariableNames = std::shared_ptr<const std::vector<std::string>>;

inline VariableNames make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Sparse multivariate Laurent polynomial with coefficients in C.
///
/// Terms live in a map keyed by exponent vectors (negative entries allowed),
/// so iteration is lexicographic in the exponents. Zero coefficients are
/// never stored, which makes structural equality the same as polynomial
/// equality.
namespace detail {
template <class V>
V invert(const V& v) {
  return inverse(v);
}
}  // namespace detail

template <class C>
class LaurentPoly {
 public:
  using Coefficient = C;
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, C>;

  explicit LaurentPoly(VariableNames vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(VariableNames vars, C value) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), std::move(value));
    return p;
  }

  static LaurentPoly variable(VariableNames vars, std::size_t index) {
    LaurentPoly p(std::move(vars));
    if (index >= p.nvars()) throw ContractError("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(std::move(e), C(1));
    return p;
  }

  static LaurentPoly monomial(VariableNames vars, Exponents exps, C coeff) {
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.nvars()) throw ContractError("exponent vector has wrong length");
    p.add_term(std::move(exps), std::move(coeff));
    return p;
  }

  [[nodiscard]] const VariableNames& vars() const { return vars_; }
  [[nodiscard]] std::size_t nvars() const { return vars_->size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  [[nodiscard]] C coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(Exponents exps, C coeff) {
    if (exps.size() != nvars()) throw ContractError("exponent vector has wrong length");
    if (coeff == C(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    lhs.check_compatible(rhs);
    LaurentPoly out(lhs.vars_);
    Exponents e(lhs.nvars());
    for (const auto& [le, lc] : lhs.terms_) {
      for (const auto& [re, rc] : rhs.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = le[i] + re[i];
        out.add_term(e, lc * rc);
      }
    }
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.same_variables(rhs) && lhs.terms_ == rhs.terms_;
  }

  /// Only monomials are units in the Laurent ring.
  [[nodiscard]] LaurentPoly inverse() const {
    if (!is_monomial()) throw DomainError("only monomials are invertible Laurent polynomials");
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    std::transform(e.begin(), e.end(), neg.begin(), [](int v) { return -v; });
    return monomial(vars_, std::move(neg), C(1) / c);
  }

  /// Substitutes point[i] for variable i. V must be constructible from C.
  template <class V>
  [[nodiscard]] V evaluate(std::span<const V> point) const {
    if (point.size() != nvars()) throw ContractError("evaluation point has wrong dimension");
    std::vector<std::map<int, V>> powers(nvars());
    auto power = [&](std::size_t var, int exp) -> const V& {
      auto& cache = powers[var];
      auto it = cache.find(exp);
      if (it != cache.end()) return it->second;
      V base = exp < 0 ? detail::invert(point[var]) : point[var];
      V acc = one_like(point[var]);
      for (int k = 0; k < std::abs(exp); ++k) acc = acc * base;
      return cache.emplace(exp, std::move(acc)).first->second;
    };
    V total = point.empty() ? V(0) : zero_like(point[0]);
    for (const auto& [e, c] : terms_) {
      V term = V(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term = term * power(i, e[i]);
      }
      total = total + term;
    }
    return total;
  }

  /// Result r with r(x_0, ..., x_{n-1}) = p(x_{perm[0]}, ..., x_{perm[n-1]}).
  [[nodiscard]] LaurentPoly substitute_permutation(std::span<const std::size_t> perm) const {
    if (perm.size() != nvars()) throw ContractError("permutation has wrong length");
    LaurentPoly out(vars_);
    Exponents ne(nvars());
    for (const auto& [e, c] : terms_) {
      std::fill(ne.begin(), ne.end(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[perm[i]] += e[i];
      out.add_term(ne, c);
    }
    return out;
  }

  /// Replaces each listed variable by its inverse.
  [[nodiscard]] LaurentPoly invert_variables(std::span<const std::size_t> which) const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      for (std::size_t v : which) ne.at(v) = -ne.at(v);
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  /// Distinct exponents of one variable across all terms.
  [[nodiscard]] std::set<int> exponents_of(std::size_t var) const {
    std::set<int> out;
    for (const auto& [e, c] : terms_) out.insert(e.at(var));
    return out;
  }

  [[nodiscard]] std::optional<std::pair<int, int>> exponent_range(std::size_t var) const {
    const auto exps = exponents_of(var);
    if (exps.empty()) return std::nullopt;
    return std::pair{*exps.begin(), *exps.rbegin()};
  }

  /// One term per line, "coeff*var^exp*..." in lexicographic exponent order.
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << '\n';
      first = false;
      os << c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) os << '*' << (*vars_)[i] << '^' << e[i];
      }
    }
    return os.str();
  }

 private:
  [[nodiscard]] bool same_variables(const LaurentPoly& other) const {
    return vars_ == other.vars_ || *vars_ == *other.vars_;
  }

  void check_compatible(const LaurentPoly& other) const {
    if (!same_variables(other)) throw ContractError("Laurent polynomials over different variables");
  }

  VariableNames vars_;
  TermMap terms_;
};

template <class C>
LaurentPoly<C> inverse(const LaurentPoly<C>& p) {
  return p.inverse();
}

template <class C>
LaurentPoly<C> one_like(const LaurentPoly<C>& p) {
  return LaurentPoly<C>::constant(p.vars(), C(1));
}

template <class C>
LaurentPoly<C> zero_like(const LaurentPoly<C>& p) {
  return LaurentPoly<C>(p.vars());
}

template <class C>
bool is_zero(const LaurentPoly<C>& p) {
  return p.is_zero();
}

}  // namespace qtasm::exact
