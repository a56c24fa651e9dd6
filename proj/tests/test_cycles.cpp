#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "zdg/corpus.hpp"
#include "zdg/cycles.hpp"

using namespace zdg;

namespace {

Graph gamma_i(Int n) { return zero_divisor_graph(make_ring(n, RingKind::ZnGaussian)); }
Graph gamma_z(Int n) { return zero_divisor_graph(make_ring(n, RingKind::Zn)); }

std::set<std::size_t> range(std::size_t lo, std::size_t hi, std::size_t step = 1) {
  std::set<std::size_t> out;
  for (std::size_t k = lo; k <= hi; k += step) out.insert(k);
  return out;
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = desk_corpus(220, 12);
  return c;
}

}  // namespace

TEST_CASE("single length search") {
  CHECK(has_cycle_of_length(complete_graph(4), 3).status == SearchStatus::Found);
  CHECK(has_cycle_of_length(complete_bipartite_graph(2, 4), 6).status == SearchStatus::NotFound);
  CHECK(has_cycle_of_length(gamma_z(6), 3).status == SearchStatus::NotFound);
  CHECK(has_cycle_of_length(complete_bipartite_graph(5, 5), 7).status == SearchStatus::NotFound);
  CHECK_THROWS_AS(has_cycle_of_length(complete_graph(4), 2), std::out_of_range);
  CHECK_THROWS_AS(has_cycle_of_length(complete_graph(4), 5), std::out_of_range);

  const auto r = has_cycle_of_length(cycle_graph(9), 9);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(oracle::valid_cycle(cycle_graph(9), r.cycle));
}

TEST_CASE("budget exhaustion is reported, never a refutation") {
  // Petersen graph: not Hamiltonian, and three expansions cannot show it.
  Graph pet = Graph::with_order(10);
  for (Vertex v = 0; v < 5; ++v) {
    pet.add_edge(v, (v + 1) % 5);
    pet.add_edge(v, v + 5);
    pet.add_edge(5 + v, 5 + (v + 2) % 5);
  }
  CHECK(has_cycle_of_length(pet, 10, 3).status == SearchStatus::BudgetExhausted);
  CHECK(has_cycle_of_length(pet, 10).status == SearchStatus::NotFound);
  CHECK(oracle::spectrum(pet) == std::set<std::size_t>{5, 6, 8, 9});

  SpectrumOptions opts;
  opts.budget = 3;
  opts.use_heuristics = false;
  const auto s = cycle_spectrum(pet, opts);
  CHECK_FALSE(s.exhaustive());
  for (std::size_t k : s.undecided()) CHECK_FALSE(s.refuted().count(k));
  CHECK(is_pancyclic(pet, opts).verdict != Verdict::Yes);
}

TEST_CASE("spectrum examples") {
  CHECK(cycle_spectrum(complete_bipartite_graph(4, 4)).present() == std::set<std::size_t>{4, 6, 8});
  CHECK(cycle_spectrum(complete_graph(8)).present() == range(3, 8));
  CHECK(cycle_spectrum(star_graph(6)).present().empty());
  const auto s = cycle_spectrum(gamma_i(4));
  CHECK_FALSE(s.contains(7));
  CHECK(s.refuted().count(7));
}

TEST_CASE("shortcuts and search give the same spectrum") {
  SpectrumOptions plain;
  plain.use_shortcuts = false;
  plain.use_heuristics = false;
  for (const Graph& g : {complete_graph(7), complete_bipartite_graph(3, 5), star_graph(5), gamma_i(5)})
    CHECK(cycle_spectrum(g).present() == cycle_spectrum(g, plain).present());
}

TEST_CASE("pancyclic and bipancyclic verdicts") {
  CHECK(is_pancyclic(gamma_i(9)).verdict == Verdict::Yes);
  CHECK(is_bipancyclic(gamma_i(5)).verdict == Verdict::Yes);
  const Graph k = gamma_i(21);
  const auto p = is_pancyclic(k), b = is_bipancyclic(k);
  CHECK(p.verdict == Verdict::No);
  CHECK(b.verdict == Verdict::No);
  CHECK_FALSE(b.missing.empty());
  CHECK(is_pancyclic(complete_graph(2)).verdict == Verdict::No);
}

TEST_CASE("hamiltonicity examples") {
  const auto k = is_hamiltonian(complete_bipartite_graph(8, 48));
  CHECK(k.verdict == Verdict::No);
  CHECK(k.reason == HamiltonResult::Reason::UnbalancedBipartite);

  const Graph z25 = gamma_z(25);
  const auto yes = is_hamiltonian(z25);
  REQUIRE(yes.verdict == Verdict::Yes);
  CHECK(yes.cycle.size() == z25.order());
  CHECK(oracle::valid_cycle(z25, yes.cycle));

  const Graph z125 = gamma_z(125);
  CutStrategies family;
  family.candidates = zn_family_cut_candidates(z125, 125);
  HamiltonOptions opts;
  opts.cut_strategies = family;
  const auto no = is_hamiltonian(z125, opts);
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.certificate);
  CHECK(oracle::components_without(z125, no.certificate->cut_set) > no.certificate->cut_set.size());

  CHECK(is_hamiltonian(Graph::with_order(2)).reason == HamiltonResult::Reason::OrderTooSmall);
}

TEST_CASE("long cycle heuristic on a dense graph") {
  const Graph c = complement(gamma_i(25));
  std::vector<Vertex> keep;
  for (const auto& comp : component_vertex_sets(c))
    if (comp.size() > keep.size()) keep = comp;
  const Graph h = c.induced(keep);
  const auto cyc = find_long_cycle(h);
  REQUIRE(cyc);
  CHECK(oracle::valid_cycle(h, *cyc));
  CHECK(find_long_cycle(h) == cyc);
}

TEST_CASE("derived cycles are valid and have the requested lengths") {
  const Graph g = complete_graph(9);
  const Cycle base{0, 1, 2, 3, 4, 5};
  const auto out = derive_cycles(g, base, {3, 4, 7});
  for (const auto& [k, c] : out) {
    CHECK(c.size() == k);
    CHECK(oracle::valid_cycle(g, c));
  }
  CHECK(out.count(7));
}

TEST_CASE("spectrum matches the brute-force oracle on the desk corpus") {
  REQUIRE(corpus().size() >= 200);
  for (const auto& e : corpus()) {
    const auto s = cycle_spectrum(e.graph);
    CHECK_MESSAGE(s.exhaustive(), e.name);
    CHECK_MESSAGE(s.present() == oracle::spectrum(e.graph), e.name);
    for (const auto& [k, c] : s.witnesses()) {
      CHECK(c.size() == k);
      CHECK_MESSAGE(oracle::valid_cycle(e.graph, c), e.name);
    }
  }
}

TEST_CASE("serial and parallel spectra agree") {
  for (const auto& e : corpus()) CHECK(cycle_spectrum(e.graph).present() == serial::cycle_spectrum(e.graph).present());
  const Graph big = line_graph(gamma_i(8));
  const auto a = cycle_spectrum(big), b = serial::cycle_spectrum(big);
  CHECK(a.present() == b.present());
  CHECK(a.witnesses() == b.witnesses());
}

TEST_CASE("bipartite graphs never produce odd witnesses") {
  for (const auto& e : corpus()) {
    if (!bipartition(e.graph)) continue;
    const auto s = cycle_spectrum(e.graph);
    for (std::size_t k : s.present()) CHECK(k % 2 == 0);
  }
}

TEST_CASE("hamiltonicity agrees with the oracle spectrum and never contradicts a cut") {
  for (const auto& e : corpus()) {
    const Graph& g = e.graph;
    const auto h = is_hamiltonian(g);
    REQUIRE_MESSAGE(h.verdict != Verdict::Undecided, e.name);
    const bool oracle_ham = g.order() >= 3 && oracle::spectrum(g).count(g.order());
    CHECK_MESSAGE((h.verdict == Verdict::Yes) == oracle_ham, e.name);
    if (h.verdict == Verdict::Yes) {
      CHECK(oracle::valid_cycle(g, h.cycle));
      CHECK_FALSE_MESSAGE(oracle::small_cut(g, 3).has_value(), e.name);
    }
    if (h.certificate) CHECK(oracle::components_without(g, h.certificate->cut_set) > h.certificate->cut_set.size());
  }
}

TEST_CASE("line graph of gamma(Z_25[i]) has every cycle length") {
  const Graph l = line_graph(gamma_i(25));
  REQUIRE(l.order() == 1476);
  const auto v = is_pancyclic(l);
  CHECK(v.verdict == Verdict::Yes);
  for (const auto& [k, c] : v.spectrum.witnesses()) CHECK(oracle::valid_cycle(l, c));
  CHECK(v.spectrum.present() == range(3, 1476));
}
