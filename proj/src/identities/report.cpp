#include "qtasm/identities/report.hpp"

#include <sstream>

namespace qtasm::identities {

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::Symbolic:
      return "symbolic";
    case CheckMode::RandomPoint:
      return "random-point";
    case CheckMode::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

namespace {

std::string parameter_string(const IdentityReport& r) {
  std::string out;
  for (const auto& [k, v] : r.parameters) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["relation"] = r.relation;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["mode"] = to_string(r.mode);
  j["points_tested"] = r.points_tested;
  j["passed"] = r.passed;
  if (r.witness) {
    nlohmann::ordered_json w;
    nlohmann::ordered_json point = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.witness->point) point[k] = v;
    w["point"] = point;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    if (!r.witness->note.empty()) w["note"] = r.witness->note;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.identity << " [" << parameter_string(r) << "] " << r.relation
     << " (" << to_string(r.mode) << ", " << r.points_tested << " points)";
  if (r.witness) {
    os << "\n  at";
    for (const auto& [k, v] : r.witness->point) os << ' ' << k << '=' << v;
    os << "\n  lhs = " << r.witness->lhs << "\n  rhs = " << r.witness->rhs;
    if (!r.witness->note.empty()) os << "\n  " << r.witness->note;
  }
  return os.str();
}

std::string csv_header() { return "identity,relation,parameters,mode,points_tested,passed"; }

std::string to_csv(const IdentityReport& r) {
  return csv_field(r.identity) + ',' + csv_field(r.relation) + ',' + csv_field(parameter_string(r)) + ',' +
         to_string(r.mode) + ',' + std::to_string(r.points_tested) + ',' + (r.passed ? "true" : "false");
}

}  // namespace qtasm::identities
