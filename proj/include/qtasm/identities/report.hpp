#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qtasm::identities {

enum class CheckMode { Symbolic, RandomPoint, Exhaustive };

std::string to_string(CheckMode mode);

struct Witness {
  /// (name, exact value) pairs of the failing point
  std::vector<std::pair<std::string, std::string>> point;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Outcome of one check. A pass means exact equality at every tested point.
struct IdentityReport {
  std::string identity;  // catalog name
  std::string relation;  // the instance checked, written out
  std::vector<std::pair<std::string, long>> parameters;
  CheckMode mode = CheckMode::RandomPoint;
  int points_tested = 0;
  bool passed = false;
  std::optional<Witness> witness;
};

nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const std::vector<IdentityReport>& reports);
std::string to_text(const IdentityReport& report);
std::string csv_header();
std::string to_csv(const IdentityReport& report);

}  // namespace qtasm::identities
