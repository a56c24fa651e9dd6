#include "zdg/corpus.hpp"

#include <random>

namespace zdg {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g = Graph::with_order(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<CorpusEntry> desk_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Graph g) {
    if (g.order() > 0 && g.order() <= max_order) out.push_back({std::move(name), std::move(g)});
  };
  for (Int n = 2; n <= 13; ++n) {
    for (RingKind kind : {RingKind::Zn, RingKind::ZnGaussian}) {
      const RingSpec ring = make_ring(n, kind);
      if (static_cast<std::size_t>(zero_divisor_set(ring).size()) > max_order) continue;
      Graph g = zero_divisor_graph(ring);
      add(ring.name() + " line", line_graph(g));
      add(ring.name() + " complement", complement(g));
      add(ring.name(), std::move(g));
    }
  }
  for (std::size_t m = 3; m <= 7; ++m) add("K_" + std::to_string(m), complete_graph(m));
  for (std::size_t m = 4; m <= 9; ++m) add("C_" + std::to_string(m), cycle_graph(m));
  add("K_{3,3}", complete_bipartite_graph(3, 3));
  add("K_{2,5}", complete_bipartite_graph(2, 5));
  add("K_{4,5}", complete_bipartite_graph(4, 5));
  add("K_{1,6}", star_graph(6));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order_dist(4, max_order);
  std::uniform_real_distribution<double> density(0.2, 0.85);
  for (std::size_t i = 0; out.size() < count; ++i) {
    const std::size_t n = order_dist(rng);
    const double p = density(rng);
    add("G(" + std::to_string(n) + "," + std::to_string(p).substr(0, 4) + ")#" + std::to_string(i),
        random_graph(n, p, rng()));
  }
  return out;
}

}  // namespace zdg
