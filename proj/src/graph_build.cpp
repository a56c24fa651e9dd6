#include <cstdint>
#include <stdexcept>

#include "zdg/graph.hpp"

namespace zdg {

namespace {

std::vector<std::string> element_labels(const std::vector<GaussianResidue>& elems, RingKind kind) {
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& x : elems) labels.push_back(element_label(x, kind));
  return labels;
}

GraphOrigin ring_origin(const RingSpec& ring) { return {ring.n, to_string(ring.kind), {}}; }

GraphOrigin with_transform(GraphOrigin o, const char* t) {
  o.transforms.emplace_back(t);
  return o;
}

std::string edge_label(const Graph& g, const Edge& e) { return "{" + g.label(e.first) + "," + g.label(e.second) + "}"; }

std::vector<std::string> edge_labels(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const auto& e : edges) labels.push_back(edge_label(g, e));
  return labels;
}

// incident[v] = indices (into `edges`) of edges touching v
std::vector<std::vector<std::size_t>> incidence(std::size_t order, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> inc(order);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].first].push_back(e);
    inc[edges[e].second].push_back(e);
  }
  return inc;
}

}  // namespace

Graph zero_divisor_graph(const RingSpec& ring) {
  const auto elems = zero_divisor_set(ring);
  Graph g(element_labels(elems, ring.kind), ring_origin(ring));
  const auto n = static_cast<std::int64_t>(elems.size());
  const Int mod = ring.n;
  std::vector<Int> re(elems.size()), im(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) {
    re[k] = elems[k].re();
    im[k] = elems[k].im();
  }
  // Each row is computed in full, so rows are written by exactly one thread.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    VertexSet& row = g.mutable_row(static_cast<Vertex>(i));
    const Int a = re[i], b = im[i];
    for (std::int64_t j = 0; j < n; ++j)
      if ((a * re[j] - b * im[j]) % mod == 0 && (a * im[j] + b * re[j]) % mod == 0 && i != j)
        row.set(static_cast<Vertex>(j));
  }
  return g;
}

Graph zero_divisor_graph(const FiniteRing& ring) {
  const auto zd = ring.zero_divisors();
  std::vector<std::string> labels;
  for (auto x : zd) labels.push_back(ring.label(x));
  Graph g(std::move(labels), {0, "product", {}});
  for (std::size_t i = 0; i < zd.size(); ++i)
    for (std::size_t j = i + 1; j < zd.size(); ++j)
      if (ring.mul(zd[i], zd[j]) == 0) g.add_edge(i, j);
  return g;
}

Graph product_ring_graph(const FiniteRing& r1, const FiniteRing& r2) {
  return zero_divisor_graph(product_ring(r1, r2));
}

Graph complement(const Graph& g) {
  Graph h(g.labels(), with_transform(g.origin(), "complement"));
  const auto n = static_cast<std::int64_t>(g.order());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    VertexSet row = g.neighbors(static_cast<Vertex>(v)).complemented();
    row.reset(static_cast<Vertex>(v));
    h.mutable_row(static_cast<Vertex>(v)) = std::move(row);
  }
  return h;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  Graph h(edge_labels(g, edges), with_transform(g.origin(), "line"));
  const auto inc = incidence(g.order(), edges);
  const auto m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t e = 0; e < m; ++e) {
    VertexSet& row = h.mutable_row(static_cast<Vertex>(e));
    for (std::size_t f : inc[edges[e].first]) row.set(f);
    for (std::size_t f : inc[edges[e].second]) row.set(f);
    row.reset(static_cast<Vertex>(e));
  }
  return h;
}

namespace serial {

Graph zero_divisor_graph(const RingSpec& ring) {
  const auto elems = zero_divisor_set(ring);
  Graph g(element_labels(elems, ring.kind), ring_origin(ring));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (mul(elems[i], elems[j]).is_zero()) g.add_edge(i, j);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.labels(), with_transform(g.origin(), "complement"));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  Graph h(edge_labels(g, edges), with_transform(g.origin(), "line"));
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [a, b] = edges[e];
      const auto [c, d] = edges[f];
      if (a == c || a == d || b == c || b == d) h.add_edge(e, f);
    }
  return h;
}

}  // namespace serial

Graph complete_graph(std::size_t m) {
  Graph g = Graph::with_order(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g = Graph::with_order(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g = Graph::with_order(m);
  for (Vertex v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

Graph star_graph(std::size_t k) { return complete_bipartite_graph(1, k); }

}  // namespace zdg
