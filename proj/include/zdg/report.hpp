#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

enum class Conclusion { Confirmed, Refuted, Undecided };
std::string to_string(Conclusion c);

using Params = std::map<std::string, Int>;
std::string to_string(const Params& p);

/// Outcome of one theorem check at one parameter point.
struct VerificationReport {
  std::string check;
  Params params;
  std::map<std::string, bool> hypotheses;
  Conclusion conclusion = Conclusion::Undecided;
  std::string reason;              // why Refuted / Undecided
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  std::string evidence;            // evidence tier: "closed-form", "full-spectrum", "sampled", ...
  std::vector<std::string> notes;  // edge cases and notation interpretations
  double ms = 0.0;
};

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing = true);

struct SuiteSummary {
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t undecided = 0;
  double ms = 0.0;
};
SuiteSummary summarize(const std::vector<VerificationReport>& reports);

/// Sorts by (check id, params) so output is independent of execution order.
void sort_reports(std::vector<VerificationReport>& reports);

nlohmann::ordered_json suite_json(const std::vector<VerificationReport>& reports, bool with_timing = true);
std::string render_table(const std::vector<VerificationReport>& reports, bool with_timing = true);

}  // namespace zdg
