#include "wordrep/report.hpp"

namespace wordrep {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus Report::overall() const {
  CheckStatus out = CheckStatus::pass;
  for (const auto& r : records) {
    if (r.status == CheckStatus::fail) return CheckStatus::fail;
    if (r.status == CheckStatus::inconclusive) out = CheckStatus::inconclusive;
  }
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    recs.push_back({
        {"claim", r.claim},
        {"anchor", r.anchor},
        {"status", to_string(r.status)},
        {"details", r.details},
        {"timing", r.timing},
    });
  }
  return {
      {"tool_version", tool_version},
      {"command", command},
      {"overall", to_string(overall())},
      {"records", recs},
  };
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& r : records) {
    out += "[" + to_string(r.status) + "] " + r.claim;
    if (!r.anchor.empty()) out += "  (" + r.anchor + ")";
    if (!r.details.empty()) out += "  " + r.details.dump();
    out += "\n";
  }
  out += "overall: " + to_string(overall()) + "\n";
  return out;
}

}  // namespace wordrep
