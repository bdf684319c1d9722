#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wordrep {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

/// One verified claim. `details` holds counts and other reproducible data;
/// timing fields are segregated into `timing` so golden-file comparisons can
/// ignore them.
struct CheckRecord {
  std::string claim;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json timing = nlohmann::json::object();
};

/// Machine-readable record of a verification or search run.
struct Report {
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<CheckRecord> records;

  /// pass iff every record passes; fail beats inconclusive.
  CheckStatus overall() const;
  nlohmann::json to_json() const;
  /// Human-readable one-line-per-record rendering.
  std::string to_text() const;
};

}  // namespace wordrep
