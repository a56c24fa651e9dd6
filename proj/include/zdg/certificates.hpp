#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// A vertex set S with c(G - S) > |S|; its existence rules out a Hamiltonian cycle.
struct CutCertificate {
  std::vector<Vertex> cut_set;
  std::size_t components_after = 0;
};

/// Recomputes c(G - S) from scratch and checks c(G - S) > |S| for a nonempty proper S.
bool validate_certificate(const Graph& g, const CutCertificate& cert);

struct CutStrategies {
  /// Tried first, in order (e.g. the sets prescribed for a recognized ring family).
  std::vector<std::vector<Vertex>> candidates;
  /// Exhaustive search over all S with |S| <= max_subset_size ...
  std::size_t max_subset_size = 3;
  /// ... skipping any size whose subset count exceeds this cap.
  std::uint64_t max_subsets = 2'000'000;
  /// Finally, neighborhoods of vertices in increasing degree order.
  bool neighborhoods = true;
};

std::optional<CutCertificate> find_cut_certificate(const Graph& g, const CutStrategies& strategies = {});

/// Cut sets named for Z_n families: for squarefree n = p1*...*pk (k >= 2) the multiples
/// of p2*...*pk; for n = p^m (m >= 3) the set {a*p^(m-1)}; for n = p^2*q^2 the nonzero
/// multiples of p*q^2. Returned as vertex indices of Gamma(Z_n) (missing labels skipped).
std::vector<std::vector<Vertex>> zn_family_cut_candidates(const Graph& gamma_zn, Int n);

}  // namespace zdg
