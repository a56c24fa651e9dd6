#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zdg/certificates.hpp"
#include "zdg/graph.hpp"

namespace zdg {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

using Cycle = std::vector<Vertex>;

/// Independent witness check: distinct vertices, consecutive adjacency, closing edge, length >= 3.
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle);

enum class SearchStatus { Found, NotFound, BudgetExhausted };
std::string to_string(SearchStatus s);

struct CycleSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  Cycle cycle;                   // set when Found
  std::uint64_t expansions = 0;  // DFS nodes pushed
};

/// Exact anchored DFS for a simple cycle on exactly k vertices.
/// Throws std::out_of_range unless 3 <= k <= order.
CycleSearchResult has_cycle_of_length(const Graph& g, std::size_t k, std::uint64_t budget = kDefaultBudget);

/// Set of realized cycle lengths with a validated witness for each.
class CycleSpectrum {
 public:
  CycleSpectrum() = default;
  explicit CycleSpectrum(std::size_t order) : order_(order) {}

  std::size_t order() const { return order_; }
  const std::set<std::size_t>& present() const { return present_; }
  const std::map<std::size_t, Cycle>& witnesses() const { return witnesses_; }
  /// Lengths whose search ended on budget.
  const std::set<std::size_t>& undecided() const { return undecided_; }
  /// Lengths that were searched for and refuted by a complete search or a closed form.
  const std::set<std::size_t>& refuted() const { return refuted_; }
  /// False when any length search hit its budget.
  bool exhaustive() const { return undecided_.empty(); }
  bool contains(std::size_t k) const { return present_.count(k) != 0; }

  /// Records a witness after re-validating it; throws std::logic_error on an invalid cycle.
  void insert(const Graph& g, Cycle cycle);
  void mark_refuted(std::size_t k);
  void mark_undecided(std::size_t k);

 private:
  std::size_t order_ = 0;
  std::set<std::size_t> present_;
  std::map<std::size_t, Cycle> witnesses_;
  std::set<std::size_t> undecided_;
  std::set<std::size_t> refuted_;
};

struct SpectrumOptions {
  std::uint64_t budget = kDefaultBudget;  // per length
  /// Restrict to these lengths (others are neither searched nor reported).
  std::optional<std::vector<std::size_t>> lengths;
  bool use_shortcuts = true;   // closed forms for complete / complete bipartite / star
  bool use_heuristics = true;  // long-cycle seeding plus chord and insertion derivation
};

/// Per-length searches run concurrently (OpenMP); results are merged by length.
CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opts = {});

namespace serial {
CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opts = {});
}

enum class Verdict { Yes, No, Undecided };
std::string to_string(Verdict v);

struct CycleVerdict {
  Verdict verdict = Verdict::Undecided;
  CycleSpectrum spectrum;
  std::vector<std::size_t> missing;    // required lengths refuted (No)
  std::vector<std::size_t> undecided;  // required lengths left open
  std::string reason;
  std::optional<CutCertificate> certificate;
};

/// Cycles of every length 3..order.
CycleVerdict is_pancyclic(const Graph& g, const SpectrumOptions& opts = {});
/// Cycles of every even length 4..order.
CycleVerdict is_bipancyclic(const Graph& g, const SpectrumOptions& opts = {});

struct HamiltonResult {
  enum class Reason { Witness, OrderTooSmall, Disconnected, CutSet, UnbalancedBipartite, Exhaustive, Budget };
  Verdict verdict = Verdict::Undecided;
  Reason reason = Reason::Budget;
  Cycle cycle;
  std::optional<CutCertificate> certificate;
  std::string detail;
};
std::string to_string(HamiltonResult::Reason r);

struct HamiltonOptions {
  std::uint64_t budget = kDefaultBudget;
  CutStrategies cut_strategies = {};
  bool use_heuristics = true;
};

HamiltonResult is_hamiltonian(const Graph& g, const HamiltonOptions& opts = {});

/// Rotation-extension search for a long cycle; returns the longest cycle seen
/// (Hamiltonian when it succeeds). Deterministic for a fixed seed.
std::optional<Cycle> find_long_cycle(const Graph& g, std::uint64_t seed = 0x5eed, std::size_t max_steps = 0);

/// Cycles of new lengths derived from `cycle` by a single chord (shorter) or a single
/// vertex insertion (longer). Only lengths in `wanted` are produced.
std::map<std::size_t, Cycle> derive_cycles(const Graph& g, const Cycle& cycle, const std::set<std::size_t>& wanted);

}  // namespace zdg
