#include "zdg/conditions.hpp"

#include <limits>

namespace zdg {

namespace {

bool is_cycle_graph(const Graph& g, std::size_t m) {
  if (g.order() != m || !is_connected(g)) return false;
  for (Vertex v = 0; v < m; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

LineConditionReport check_line_pancyclic_condition(const Graph& g) {
  LineConditionReport rep;
  const std::size_t n = g.order();
  rep.connected = is_connected(g);
  rep.order_ok = n >= 4;
  rep.bridges = bridges(g);
  rep.excluded_cycle = is_cycle_graph(g, 4) || is_cycle_graph(g, 5);
  const auto deg = g.degrees();
  rep.min_degree_sum = std::numeric_limits<std::size_t>::max();
  for (const auto& e : g.edges()) {
    const std::size_t sum = deg[e.first] + deg[e.second];
    if (sum < rep.min_degree_sum) {
      rep.min_degree_sum = sum;
      rep.min_edge = e;
    }
  }
  if (!rep.min_edge) rep.min_degree_sum = 0;
  // deg(u)+deg(v) >= (2n+1)/3  <=>  3*(deg(u)+deg(v)) >= 2n+1
  rep.degree_sum_ok = rep.min_edge && 3 * rep.min_degree_sum >= 2 * n + 1;
  rep.holds = rep.connected && rep.order_ok && rep.bridges.empty() && rep.degree_sum_ok && !rep.excluded_cycle;
  if (!rep.connected)
    rep.detail = "disconnected";
  else if (!rep.order_ok)
    rep.detail = "order < 4";
  else if (!rep.bridges.empty())
    rep.detail = std::to_string(rep.bridges.size()) + " bridge(s)";
  else if (!rep.degree_sum_ok)
    rep.detail = "min degree sum " + std::to_string(rep.min_degree_sum) + " < (2n+1)/3";
  else if (rep.excluded_cycle)
    rep.detail = "graph is C_4 or C_5";
  else
    rep.detail = "min degree sum " + std::to_string(rep.min_degree_sum) + " >= (2*" + std::to_string(n) + "+1)/3";
  return rep;
}

bool check_diameter_condition(const Graph& g) {
  if (g.order() < 4) return false;
  const auto d = diameter(g);
  return d && *d <= 2;
}

FanConditionReport check_fan_condition(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 3) throw NotTwoConnected(std::nullopt, "Fan condition needs more than 3 vertices");
  if (!is_connected(g)) throw NotTwoConnected(std::nullopt, "Fan condition needs a connected graph");
  if (auto cut = find_cut_vertex(g))
    throw NotTwoConnected(cut, "graph is not 2-connected: cut vertex " + g.label(*cut));
  FanConditionReport rep;
  rep.holds = true;
  const auto deg = g.degrees();
  for (Vertex u = 0; u < n; ++u) {
    // 2 * deg >= n  <=>  deg >= n/2
    if (2 * deg[u] >= n) continue;
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[v] == 2 && 2 * deg[v] < n) {
        rep.holds = false;
        rep.violating_pair = Edge{u, v};
        return rep;
      }
    }
  }
  return rep;
}

bool check_bondy_edge_count(const Graph& g) { return 4 * g.size() >= g.order() * g.order(); }

bool validate_r_graph(const Graph& g, const RGraphWitness& w) {
  const std::size_t n = g.order();
  if (n < 5) return false;
  const Vertex vs[4] = {w.r, w.s, w.t, w.u};
  for (int i = 0; i < 4; ++i) {
    if (vs[i] >= n) return false;
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) return false;
  }
  if (!g.adjacent(w.r, w.s) || !g.adjacent(w.s, w.t) || !g.adjacent(w.t, w.u) || !g.adjacent(w.u, w.r)) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (v == w.r || v == w.s || v == w.t || v == w.u) continue;
    if (!g.adjacent(v, w.r) && !g.adjacent(v, w.t)) return false;
  }
  return true;
}

std::optional<RGraphWitness> is_r_graph(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 5) throw std::invalid_argument("R-graph needs order >= 5");
  for (Vertex r = 0; r < n; ++r) {
    const VertexSet& nr = g.neighbors(r);
    for (Vertex s = nr.find_first(); s < n; s = nr.find_next(s + 1)) {
      const VertexSet& ns = g.neighbors(s);
      for (Vertex t = ns.find_first(); t < n; t = ns.find_next(t + 1)) {
        if (t == r) continue;
        // u is a common neighbor of r and t, so it is dominated anyway; every
        // vertex other than r and t must lie in N(r) | N(t).
        VertexSet uncovered = (nr | g.neighbors(t)).complemented();
        uncovered.reset(r);
        uncovered.reset(t);
        if (!uncovered.none()) continue;
        VertexSet candidates = nr & g.neighbors(t);
        candidates.reset(s);
        const Vertex u = candidates.find_first();
        if (u < n) return RGraphWitness{r, s, t, u};
      }
    }
  }
  return std::nullopt;
}

}  // namespace zdg
