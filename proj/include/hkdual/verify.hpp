#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hkdual {

enum class CheckStatus { pass, fail, flagged };

std::string status_label(CheckStatus s);  // "PASS", "FAIL", "FLAGGED"

struct CheckResult {
  std::string family;
  std::string name;
  std::string reference;  // the identity being checked, in formula form
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::fail;
};

struct CheckSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t flagged = 0;
};

/// Family names accepted by run_checks, in execution order.
const std::vector<std::string>& check_families();

/// Runs every family, or only `family`. Throws std::invalid_argument for an
/// unknown family name. An exception inside a check is recorded as FAIL.
std::vector<CheckResult> run_checks(const std::optional<std::string>& family = std::nullopt);

CheckSummary summarize(const std::vector<CheckResult>& results);

inline constexpr int kReportSchemaVersion = 1;

/// {"schemaVersion", "command", "checks": [{name, paperRef, expected, computed,
/// status, family}], "summary"} serialized with two-space indentation.
std::string checks_to_json(const std::vector<CheckResult>& results);

}  // namespace hkdual
