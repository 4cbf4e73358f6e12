#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scd {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// pass/fail are assertion results; holds/fails/unknown are model data and
/// never make a run fail.
enum class CheckOutcome { pass, fail, holds, fails, unknown, not_applicable };

std::string_view to_string(CheckOutcome o);
CheckOutcome parse_check_outcome(std::string_view s);  // SyntaxError

struct CheckResult {
  std::string id;
  CheckOutcome outcome = CheckOutcome::pass;
  std::optional<std::string> witness;
  double millis = 0.0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RunReport {
  std::string version{kToolVersion};
  std::string input_digest;
  std::vector<CheckResult> checks;

  bool has_failure() const;
  int exit_code() const { return has_failure() ? 1 : 0; }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// FNV-1a 64, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

std::string report_to_json(const RunReport& r);
RunReport report_from_json(const std::string& text);  // SyntaxError

}  // namespace scd
