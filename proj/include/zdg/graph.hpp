#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/finite_ring.hpp"
#include "zdg/ring.hpp"

namespace zdg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Where a graph came from; carried through transforms and serialized with it.
struct GraphOrigin {
  Int n = 0;                            // 0 when the graph is not built from Z_n / Z_n[i]
  std::string kind;                     // "zn", "zni", "product", or "" for ad-hoc graphs
  std::vector<std::string> transforms;  // "line" / "complement", applied left to right

  bool operator==(const GraphOrigin&) const = default;
};

/// Undirected simple graph with unique vertex labels and packed bit adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels, GraphOrigin origin = {});

  /// Unlabeled graph on vertices "0".."order-1".
  static Graph with_order(std::size_t order);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const;

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  /// Sets or clears {u, v}; self-loops are rejected.
  void set_edge(Vertex u, Vertex v, bool present = true);
  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }

  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  VertexSet& mutable_row(Vertex v) { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::vector<std::size_t> degrees() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> index_of(std::string_view label) const;
  /// Like index_of but throws std::out_of_range for unknown labels.
  Vertex at(std::string_view label) const;

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `keep` (in the given order), labels preserved.
  Graph induced(const std::vector<Vertex>& keep) const;

  const GraphOrigin& origin() const { return origin_; }
  GraphOrigin& origin() { return origin_; }

  /// Structural equality: labels, adjacency, and origin.
  bool operator==(const Graph& o) const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> rows_;
  std::unordered_map<std::string, Vertex> index_;
  GraphOrigin origin_;
};

std::string vertex_list(const Graph& g, const std::vector<Vertex>& vs);

// Construction -------------------------------------------------------------

/// Gamma(R) for R = Z_n or Z_n[i]; OpenMP-parallel over adjacency rows.
Graph zero_divisor_graph(const RingSpec& ring);
/// Gamma(R) for an explicit table ring.
Graph zero_divisor_graph(const FiniteRing& ring);
/// Gamma(R1 x R2) with componentwise multiplication.
Graph product_ring_graph(const FiniteRing& r1, const FiniteRing& r2);

Graph complement(const Graph& g);
Graph line_graph(const Graph& g);

/// Standard small graphs, used by tests and the condition checkers.
Graph complete_graph(std::size_t m);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t m);
Graph star_graph(std::size_t k);

namespace serial {
// Reference implementations kept for equivalence tests and benchmarks.
Graph zero_divisor_graph(const RingSpec& ring);
Graph complement(const Graph& g);
Graph line_graph(const Graph& g);
}  // namespace serial

// Structure ----------------------------------------------------------------

struct StructuralClass {
  enum class Kind { CompleteK, CompleteBipartite, Star, Other };
  Kind kind = Kind::Other;
  std::size_t a = 0;  // m for CompleteK, smaller part for CompleteBipartite, leaves for Star
  std::size_t b = 0;  // larger part for CompleteBipartite

  bool operator==(const StructuralClass&) const = default;
  std::string to_string() const;
};

struct Bipartition {
  std::vector<Vertex> smaller;
  std::vector<Vertex> larger;
};

struct GraphStats {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t pendant_count = 0;
  std::size_t component_count = 0;
  std::optional<std::size_t> diameter;  // nullopt: unreachable pairs exist
  std::optional<Bipartition> bipartition;
};

StructuralClass recognize(const Graph& g);
GraphStats stats(const Graph& g);

/// BFS 2-coloring; parts are reported smaller part first. nullopt when not bipartite.
std::optional<Bipartition> bipartition(const Graph& g);

/// Vertex index sets of the connected components, ordered by smallest member.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Number of components of g - removed.
std::size_t components_after_removal(const Graph& g, const VertexSet& removed);

/// Shortest-path distances from `source` (SIZE_MAX for unreachable).
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
/// Maximum distance; nullopt when the graph is disconnected. Order-0/1 graphs have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

std::vector<Edge> bridges(const Graph& g);
/// A cut vertex, when the graph is connected and has one.
std::optional<Vertex> find_cut_vertex(const Graph& g);
bool is_two_connected(const Graph& g);

/// Length of a shortest cycle; nullopt for acyclic graphs.
std::optional<std::size_t> girth(const Graph& g);

}  // namespace zdg
