#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// Deterministic corpus of small graphs: every Gamma(Z_n) and Gamma(Z_n[i]) for n <= 13 with
/// at most `max_order` vertices, their line graphs and complements within the same bound (empty graphs
/// skipped), a few
/// named graphs, then seeded random graphs until `count` entries exist.
std::vector<CorpusEntry> desk_corpus(std::size_t count, std::size_t max_order = 12, std::uint64_t seed = 20240229);

/// G(n, p) with a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace zdg
