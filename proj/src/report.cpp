#include "zdg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace zdg {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Confirmed: return "confirmed";
    case Conclusion::Refuted: return "refuted";
    case Conclusion::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(const Params& p) {
  if (p.empty()) return "-";
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["hypotheses"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.hypotheses) j["hypotheses"][k] = v;
  j["conclusion"] = to_string(r.conclusion);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["evidence"] = r.evidence;
  j["witnesses"] = r.witnesses;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["ms"] = static_cast<std::int64_t>(r.ms + 0.5);
  return j;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.conclusion) {
      case Conclusion::Confirmed: ++s.confirmed; break;
      case Conclusion::Refuted: ++s.refuted; break;
      case Conclusion::Undecided: ++s.undecided; break;
    }
    s.ms += r.ms;
  }
  return s;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params < b.params;
  });
}

nlohmann::ordered_json suite_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  const auto s = summarize(reports);
  nlohmann::ordered_json j;
  j["summary"] = {{"confirmed", s.confirmed}, {"refuted", s.refuted}, {"undecided", s.undecided}};
  if (with_timing) j["summary"]["ms"] = static_cast<std::int64_t>(s.ms + 0.5);
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r, with_timing));
  return j;
}

std::string render_table(const std::vector<VerificationReport>& reports, bool with_timing) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-22s %-10s %-14s %s\n", "check", "params", "result", "evidence",
                with_timing ? "ms" : "");
  os << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-10s %-22s %-10s %-14s ", r.check.c_str(), to_string(r.params).c_str(),
                  to_string(r.conclusion).c_str(), r.evidence.c_str());
    os << line;
    if (with_timing) os << static_cast<std::int64_t>(r.ms + 0.5);
    os << "\n";
    if (!r.reason.empty()) os << "    reason: " << r.reason << "\n";
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
  }
  const auto s = summarize(reports);
  os << "confirmed " << s.confirmed << ", refuted " << s.refuted << ", undecided " << s.undecided << "\n";
  return os.str();
}

}  // namespace zdg
