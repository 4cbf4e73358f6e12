#include "scd/harness/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "scd/error.hpp"

namespace scd {

namespace {
constexpr std::pair<CheckOutcome, std::string_view> kOutcomeNames[] = {
    {CheckOutcome::pass, "pass"},       {CheckOutcome::fail, "fail"},
    {CheckOutcome::holds, "holds"},     {CheckOutcome::fails, "fails"},
    {CheckOutcome::unknown, "unknown"}, {CheckOutcome::not_applicable, "not_applicable"},
};
}  // namespace

std::string_view to_string(CheckOutcome o) {
  for (const auto& [k, v] : kOutcomeNames) {
    if (k == o) return v;
  }
  return "?";
}

CheckOutcome parse_check_outcome(std::string_view s) {
  for (const auto& [k, v] : kOutcomeNames) {
    if (v == s) return k;
  }
  throw Error(ErrorCode::SyntaxError, "unknown outcome " + std::string(s));
}

bool RunReport::has_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.outcome == CheckOutcome::fail; });
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["input_digest"] = r.input_digest;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["outcome"] = to_string(c.outcome);
    if (c.witness) e["witness"] = *c.witness;
    e["millis"] = c.millis;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunReport r;
    r.version = j.at("version").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    for (const auto& e : j.at("checks")) {
      CheckResult c;
      c.id = e.at("id").get<std::string>();
      c.outcome = parse_check_outcome(e.at("outcome").get<std::string>());
      if (e.contains("witness")) c.witness = e.at("witness").get<std::string>();
      c.millis = e.at("millis").get<double>();
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::SyntaxError, ex.what());
  }
}

}  // namespace scd
