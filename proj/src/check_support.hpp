#pragma once

// Shared machinery for the theorem checks: report assembly, witness
// serialization, and expectation helpers mapping verdicts to conclusions.

#include <array>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "zdg/conditions.hpp"
#include "zdg/corpus.hpp"
#include "zdg/cycles.hpp"
#include "zdg/report.hpp"
#include "zdg/theorems.hpp"
#include "zdg/witness_json.hpp"

namespace zdg {

/// Line graphs up to this order get a full spectrum under the standard profile.
inline constexpr std::size_t kFullSpectrumLimit = 200;
/// Line graphs above this order are not materialized; hypotheses only.
inline constexpr std::size_t kLineGraphLimit = 3000;

class ReportBuilder {
 public:
  explicit ReportBuilder(VerificationReport& r) : r_(r) {}

  void hypothesis(const std::string& name, bool value) { r_.hypotheses[name] = value; }
  void witness(const std::string& name, json value) { r_.witnesses[name] = std::move(value); }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }
  void evidence(const std::string& tier);

  /// A conclusion component; false with decisive evidence refutes the report.
  void require(const std::string& name, bool ok, json detail = nullptr);
  void undecided(const std::string& name, const std::string& why);

  bool refuted() const { return refuted_; }
  void finish();

 private:
  VerificationReport& r_;
  bool refuted_ = false;
  bool undecided_ = false;
  std::string first_refutation_;
  std::string first_undecided_;
};

/// Adjacency agrees with x*y == 0 on every pair, and vertices are exactly the nonzero zero divisors.
void require_gamma_integrity(ReportBuilder& b, const RingSpec& ring, const Graph& g);

void require_structure(ReportBuilder& b, const std::string& name, const Graph& g, const StructuralClass& expected);

void expect_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx);
void expect_not_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx);
void expect_bipancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx);
void expect_not_bipancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx);
void expect_hamiltonian(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx);
void expect_not_hamiltonian(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx,
                            const CutStrategies& strategies = {});

/// Every length in `lengths` must be realized (found witnesses are re-validated).
void expect_lengths(ReportBuilder& b, const std::string& name, const Graph& g, std::vector<std::size_t> lengths,
                    const CheckContext& ctx);

/// Lengths sampled on large graphs: 3, 4, order/2, order-1, order.
std::vector<std::size_t> sampled_lengths(std::size_t order);

/// L(g) pancyclic: full spectrum when small enough (or under the extended profile),
/// else sampled lengths. Records the evidence tier. When L(g) is too large to build, the
/// edge-degree condition (or `r_graph`, an R-graph witness on g) stands in as the evidence.
void expect_line_graph_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx,
                                 bool r_graph = false);

/// Nonzero multiples of `gen` in Z_n[i], as labels.
std::set<std::string> principal_ideal(const GaussianResidue& gen);

/// Validates four named vertices (r, s, t, u) as an R-graph witness; records hypothesis
/// "named_witness_valid". Missing or repeated vertices make it invalid.
void check_named_witness(ReportBuilder& b, const Graph& g, const std::array<std::string, 4>& labels);
/// Searches g for an R-graph witness; records hypothesis "r_graph".
bool find_r_graph(ReportBuilder& b, const Graph& g);

/// Corpus used by the implication checks (P2.4, C3.2, P3.1, L3.6, T4.1).
std::vector<CorpusEntry> implication_corpus(const Params& p);
std::vector<Params> corpus_grid(Profile profile);
void admit_corpus(const Params& p);

/// Ring element (a + b i) mod n as a vertex label of Gamma(Z_n[i]).
std::string gaussian_label(Int a, Int b, Int n);

Int ipow(Int base, int exp);
void admit(bool ok, const std::string& message);
/// Smoke, standard, and standard plus `extra` for the extended profile.
std::vector<Params> profile_grid(Profile profile, std::vector<Params> smoke, std::vector<Params> standard,
                                 std::vector<Params> extra = {});
/// Params must carry exactly `keys`.
void admit_keys(const Params& p, std::initializer_list<const char*> keys);

// Registration per check group.
void register_cycle_checks(std::vector<TheoremCheck>& out);
void register_line_checks(std::vector<TheoremCheck>& out);
void register_complement_checks(std::vector<TheoremCheck>& out);

}  // namespace zdg
