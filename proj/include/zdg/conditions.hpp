#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Hypothesis of the edge-degree criterion for pancyclic line graphs:
/// connected, bridgeless, order >= 4, deg(u) + deg(v) >= (2n+1)/3 on every edge, and not C_4 / C_5.
/// "Bridgeless" is the strict stand-in for the weaker almost-bridgeless notion; bridges are reported.
struct LineConditionReport {
  bool holds = false;
  bool connected = false;
  bool order_ok = false;
  bool degree_sum_ok = false;
  bool excluded_cycle = false;  // g is C_4 or C_5
  std::vector<Edge> bridges;
  std::optional<Edge> min_edge;  // edge minimizing deg(u) + deg(v)
  std::size_t min_degree_sum = 0;
  std::string detail;
};
LineConditionReport check_line_pancyclic_condition(const Graph& g);

/// Diameter at most 2 and at least 4 vertices.
bool check_diameter_condition(const Graph& g);

struct NotTwoConnected : std::invalid_argument {
  NotTwoConnected(std::optional<Vertex> cut, const std::string& what)
      : std::invalid_argument(what), cut_vertex(cut) {}
  std::optional<Vertex> cut_vertex;  // nullopt when the graph is disconnected or too small
};

struct FanConditionReport {
  bool holds = false;
  std::optional<Edge> violating_pair;  // a pair at distance 2 with both degrees < n/2
};
/// d(u,v) = 2 implies max(deg u, deg v) >= n/2, over all pairs. Throws NotTwoConnected
/// unless g is 2-connected on more than 3 vertices.
FanConditionReport check_fan_condition(const Graph& g);

/// |E| >= n^2 / 4.
bool check_bondy_edge_count(const Graph& g);

/// Distinct r, s, t, u with rs, st, tu, ur edges and every other vertex adjacent to r or t.
struct RGraphWitness {
  Vertex r, s, t, u;
  bool operator==(const RGraphWitness&) const = default;
};
bool validate_r_graph(const Graph& g, const RGraphWitness& w);
/// Lexicographically first witness (r, s, t, u); nullopt after exhausting all ordered 4-cycles.
/// Throws std::invalid_argument for order < 5.
std::optional<RGraphWitness> is_r_graph(const Graph& g);

}  // namespace zdg
