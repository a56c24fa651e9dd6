#pragma once

// Brute-force reference implementations. Deliberately naive and independent of the
// library's search code; only the Graph container and ring arithmetic are shared.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace oracle {

using zdg::Graph;
using zdg::Int;
using zdg::Vertex;

/// x != 0 and some y != 0 has x*y == 0, by scanning every y of the same ring.
bool zero_divisor(const zdg::GaussianResidue& x, zdg::RingKind kind);

/// Some y has x*y == 1.
bool unit(const zdg::GaussianResidue& x, zdg::RingKind kind);

/// Cycle lengths by subset dynamic programming over paths (up to ~16 vertices).
std::set<std::size_t> spectrum_dp(const Graph& g);

/// Cycle lengths by trying every ordering of every vertex subset (up to ~8 vertices).
std::set<std::size_t> spectrum_permutations(const Graph& g);

/// Permutation search up to 8 vertices, subset DP above that.
std::set<std::size_t> spectrum(const Graph& g);

/// Distinct vertices, consecutive edges, closing edge, at least 3 vertices.
bool valid_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Components of G - S by union-find on the surviving edges.
std::size_t components_without(const Graph& g, const std::vector<Vertex>& removed);

/// Smallest S (|S| <= max_size, nonempty, proper) with c(G - S) > |S|, if any.
std::optional<std::vector<Vertex>> small_cut(const Graph& g, std::size_t max_size);

/// Every 4-tuple of distinct vertices checked against the R-graph conditions.
bool has_r_graph(const Graph& g);

}  // namespace oracle
