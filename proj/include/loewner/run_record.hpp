#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "loewner/admissibility.hpp"
#include "loewner/bombieri.hpp"
#include "loewner/integrator.hpp"
#include "loewner/problem.hpp"
#include "loewner/variational.hpp"

namespace loewner {

inline constexpr const char* kToolVersion = "0.1.0";

/// Ordered scalar outputs that do not fit the other result types.
using NamedValues = std::vector<std::pair<std::string, double>>;

using RunResult = std::variant<SolverResult, HessianF, AdmissibilityReport, NamedValues>;

/// Everything one CLI invocation reports.
struct RunRecord {
  std::string command;
  std::optional<ProblemSpec> spec;
  std::optional<Problem> problem;
  std::optional<IntegratorOptions> integ;
  std::map<std::string, double> settings;
  RunResult result;
  double wall_time = 0.0;
  std::string tool_version = kToolVersion;
};

bool operator==(const RunRecord& a, const RunRecord& b);

/// Rounds to 12 significant digits; every float in serialized output goes
/// through this, so parsing serialized output is exact.
double round12(double x);

nlohmann::ordered_json to_json(const RunRecord& r);
RunRecord from_json(const nlohmann::ordered_json& j);

std::string serialize(const RunRecord& r);
RunRecord parse(const std::string& text);

/// "key: value" lines, nested keys joined with '.'.
std::string to_text(const RunRecord& r);

/// Formats with 12 significant digits ("inf" for infinity).
std::string format_number(double x);

}  // namespace loewner
