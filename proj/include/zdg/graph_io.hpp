#pragma once

#include <iosfwd>
#include <string>

#include "zdg/graph.hpp"

namespace zdg {

/// Graphviz output: one quoted vertex per line, then undirected `--` edges.
std::string to_dot(const Graph& g);

/// {"n", "kind", "transform", "vertices", "edges"} with edges as index pairs.
std::string to_json(const Graph& g);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Graph graph_from_json(const std::string& text);

/// Human-readable summary (order, size, degrees, structure).
std::string to_text(const Graph& g);

}  // namespace zdg
