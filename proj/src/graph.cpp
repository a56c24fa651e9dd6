#include "zdg/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace zdg {

Graph::Graph(std::vector<std::string> labels, GraphOrigin origin)
    : labels_(std::move(labels)), origin_(std::move(origin)) {
  rows_.assign(labels_.size(), VertexSet(labels_.size()));
  index_.reserve(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw std::invalid_argument("duplicate vertex label '" + labels_[v] + "'");
  }
}

Graph Graph::with_order(std::size_t order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t v = 0; v < order; ++v) labels.push_back(std::to_string(v));
  return Graph(std::move(labels));
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + labels_.at(u));
  rows_.at(u).assign(v, present);
  rows_.at(v).assign(u, present);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = rows_[v].count();
  return d;
}

std::optional<Vertex> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(std::string_view label) const {
  if (auto v = index_of(label)) return *v;
  throw std::out_of_range("no vertex labeled '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].find_next(u + 1); v < order(); v = rows_[u].find_next(v + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(labels_.at(v));
  Graph h(std::move(labels), origin_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

bool Graph::operator==(const Graph& o) const {
  return labels_ == o.labels_ && rows_ == o.rows_ && origin_ == o.origin_;
}

std::string vertex_list(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + g.label(vs[i]);
  return out + "]";
}

std::string StructuralClass::to_string() const {
  switch (kind) {
    case Kind::CompleteK: return "K_" + std::to_string(a);
    case Kind::CompleteBipartite: return "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Kind::Star: return "K_{1," + std::to_string(a) + "}";
    case Kind::Other: return "other";
  }
  return "other";
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex u = queue[h];
      bool ok = true;
      g.neighbors(u).for_each([&](Vertex w) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (color[v] == 0 ? parts.smaller : parts.larger).push_back(v);
  if (parts.smaller.size() > parts.larger.size()) std::swap(parts.smaller, parts.larger);
  return parts;
}

StructuralClass recognize(const Graph& g) {
  using K = StructuralClass::Kind;
  const std::size_t n = g.order();
  if (n == 0) return {};
  const auto deg = g.degrees();
  if (std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == n - 1; })) return {K::CompleteK, n, 0};
  if (!is_connected(g)) return {};
  auto parts = bipartition(g);
  if (!parts) return {};
  const std::size_t a = parts->smaller.size(), b = parts->larger.size();
  if (g.size() != a * b) return {};
  if (a == 1) return {K::Star, b, 0};
  return {K::CompleteBipartite, a, b};
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> out;
  VertexSet unseen(n, true);
  for (Vertex s = unseen.find_first(); s < n; s = unseen.find_first()) {
    std::vector<Vertex> comp{s};
    unseen.reset(s);
    for (std::size_t h = 0; h < comp.size(); ++h) {
      VertexSet next = g.neighbors(comp[h]) & unseen;
      next.for_each([&](Vertex w) {
        unseen.reset(w);
        comp.push_back(w);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& comp : component_vertex_sets(g)) out.push_back(g.induced(comp));
  return out;
}

std::size_t components_after_removal(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  VertexSet unseen = removed.complemented();
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = unseen.find_first(); s < n; s = unseen.find_first()) {
    ++count;
    unseen.reset(s);
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      VertexSet next = g.neighbors(u) & unseen;
      next.for_each([&](Vertex w) {
        unseen.reset(w);
        stack.push_back(w);
      });
    }
  }
  return count;
}

std::size_t component_count(const Graph& g) { return components_after_removal(g, VertexSet(g.order())); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kInf);
  VertexSet unseen(g.order(), true);
  dist[source] = 0;
  unseen.reset(source);
  std::vector<Vertex> frontier{source}, next_frontier;
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    next_frontier.clear();
    for (Vertex u : frontier) {
      VertexSet next = g.neighbors(u) & unseen;
      next.for_each([&](Vertex w) {
        unseen.reset(w);
        dist[w] = d;
        next_frontier.push_back(w);
      });
    }
    std::swap(frontier, next_frontier);
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

// Iterative Tarjan low-link over the whole graph.
struct LowLink {
  std::vector<std::size_t> disc, low;
  std::vector<Edge> bridges;
  std::vector<bool> articulation;

  explicit LowLink(const Graph& g) : disc(g.order(), 0), low(g.order(), 0), articulation(g.order(), false) {
    std::size_t timer = 0;
    struct Frame {
      Vertex v, parent;
      std::size_t next;
      std::size_t children;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
      if (disc[root]) continue;
      disc[root] = low[root] = ++timer;
      stack.push_back({root, root, 0, 0});
      while (!stack.empty()) {
        Frame& f = stack.back();
        const Vertex w = g.neighbors(f.v).find_next(f.next);
        if (w < g.order()) {
          f.next = w + 1;
          if (w == f.parent) continue;
          if (disc[w]) {
            low[f.v] = std::min(low[f.v], disc[w]);
          } else {
            disc[w] = low[w] = ++timer;
            ++f.children;
            stack.push_back({w, f.v, 0, 0});
          }
          continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) {
          if (done.children > 1) articulation[done.v] = true;
          continue;
        }
        const Vertex p = done.parent;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) bridges.emplace_back(std::min(p, done.v), std::max(p, done.v));
        if (stack.size() > 1 && low[done.v] >= disc[p]) articulation[p] = true;
      }
    }
    std::sort(bridges.begin(), bridges.end());
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) { return LowLink(g).bridges; }

std::optional<Vertex> find_cut_vertex(const Graph& g) {
  LowLink ll(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (ll.articulation[v]) return v;
  return std::nullopt;
}

bool is_two_connected(const Graph& g) { return g.order() >= 3 && is_connected(g) && !find_cut_vertex(g); }

std::optional<std::size_t> girth(const Graph& g) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n), parent(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex u = queue[h];
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](Vertex w) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.order = g.order();
  s.size = g.size();
  const auto deg = g.degrees();
  if (!deg.empty()) {
    s.min_degree = *std::min_element(deg.begin(), deg.end());
    s.max_degree = *std::max_element(deg.begin(), deg.end());
  }
  s.pendant_count = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1U));
  s.component_count = component_count(g);
  s.diameter = diameter(g);
  s.bipartition = bipartition(g);
  return s;
}

}  // namespace zdg
