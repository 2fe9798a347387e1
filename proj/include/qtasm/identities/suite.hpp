#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qtasm/identities/models.hpp"
#include "qtasm/identities/report.hpp"

namespace qtasm::identities {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int points = 20;
  /// Adds the larger l = 2 instances of the factorization and special-value
  /// checks (orders 8 and 9).
  bool extended = false;
  /// 0 means one thread per hardware core.
  unsigned threads = 0;
  ice::WeightRule rule = ice::WeightRule::calibrated();
  std::uint64_t max_states = ice::kDefaultMaxStates;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
};

const std::vector<CatalogEntry>& catalog();
bool in_catalog(std::string_view name);

/// Every check draws its random points from a seed derived from the suite
/// seed and the check's own parameters, so results do not depend on the
/// order or concurrency in which checks run.
class Suite {
 public:
  explicit Suite(SuiteOptions options = {});

  [[nodiscard]] const SuiteOptions& options() const { return options_; }
  [[nodiscard]] const Models& models() const { return models_; }

  // --- individual checks -------------------------------------------------
  [[nodiscard]] IdentityReport yang_baxter() const;
  [[nodiscard]] std::vector<IdentityReport> initial_values() const;
  [[nodiscard]] std::vector<IdentityReport> symmetry_and_inversion(int m) const;
  /// Z_QT(2m+1) at x_i = a x_j against the order 2m-3 value; (i, j) 0-based
  /// with i != j < m. Without indices all pairs are cycled through.
  [[nodiscard]] IdentityReport bulk_recursion(int m) const;
  [[nodiscard]] IdentityReport bulk_recursion(int m, int i, int j) const;
  /// Middle-line specializations x_{m+1} = x_j / a and x_{m+1} = a x_j.
  [[nodiscard]] std::vector<IdentityReport> middle_recursions(int m) const;
  /// Rebuilds Z_QT(2m+1) in x_{m+1} from the 2m middle-line values and
  /// compares with the state sum at fresh points.
  [[nodiscard]] IdentityReport reconstruction(int m) const;
  [[nodiscard]] IdentityReport kuperberg_recursion(int l, int r) const;
  [[nodiscard]] IdentityReport ztilde_recursion(int l) const;
  [[nodiscard]] std::vector<IdentityReport> factorizations(int l) const;
  [[nodiscard]] IdentityReport cyclotomic_identity() const;
  [[nodiscard]] std::vector<IdentityReport> special_value(int l) const;
  [[nodiscard]] std::vector<IdentityReport> special_recursions(int l) const;
  [[nodiscard]] std::vector<IdentityReport> enumeration() const;
  /// Z(l; x, y) at y_i = a x_j; requires i != j.
  [[nodiscard]] IdentityReport dwbc_recursion(int l) const;
  [[nodiscard]] IdentityReport dwbc_recursion(int l, int i, int j) const;
  [[nodiscard]] IdentityReport ht_recursion(int l) const;
  [[nodiscard]] std::vector<IdentityReport> widths(int m) const;

  // --- catalog -------------------------------------------------------------
  /// Throws ContractError for a name outside the catalog.
  [[nodiscard]] std::vector<IdentityReport> run(std::string_view name) const;
  [[nodiscard]] std::vector<IdentityReport> run_all() const;

 private:
  [[nodiscard]] std::vector<std::function<std::vector<IdentityReport>()>> tasks(std::string_view name) const;
  [[nodiscard]] std::uint64_t seed_for(const std::string& key) const;

  SuiteOptions options_;
  Models models_;
};

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace qtasm::identities
