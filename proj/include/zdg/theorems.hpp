#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/cycles.hpp"
#include "zdg/graph.hpp"
#include "zdg/report.hpp"

namespace zdg {

enum class Profile { Smoke, Standard, Extended };
std::string to_string(Profile p);
Profile profile_from_string(const std::string& s);

enum class Direction { If, OnlyIf, Iff };
std::string to_string(Direction d);

struct CheckContext {
  std::uint64_t budget = kDefaultBudget;
  Profile profile = Profile::Standard;
  /// Fault-injection hook applied to every zero-divisor graph a check builds.
  std::function<void(Graph&)> mutate_gamma;

  Graph gamma(const RingSpec& ring) const;
  Graph gamma(Int n, RingKind kind) const { return gamma(make_ring(n, kind)); }
};

/// Thrown when parameters violate a statement's hypotheses.
struct InadmissibleParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ReportBuilder;

struct TheoremCheck {
  std::string id;
  std::string summary;
  Direction direction = Direction::If;
  std::vector<std::string> symbols;
  std::function<std::vector<Params>(Profile)> grid;
  /// Throws InadmissibleParams when `params` is outside the statement's hypotheses.
  std::function<void(const Params&)> admit;
  std::function<void(const Params&, const CheckContext&, ReportBuilder&)> run;
};

const std::vector<TheoremCheck>& theorem_registry();
/// Throws std::out_of_range for unknown ids.
const TheoremCheck& find_check(const std::string& id);

VerificationReport run_point(const TheoremCheck& check, const Params& params, const CheckContext& ctx);

/// One report per grid point of the context's profile, or a single report when `params` is given.
std::vector<VerificationReport> run_check(const std::string& id, const std::optional<Params>& params,
                                          const CheckContext& ctx);

/// Every registered check over the profile grid; grid points run concurrently, output is sorted.
std::vector<VerificationReport> run_all(const CheckContext& ctx);

}  // namespace zdg
