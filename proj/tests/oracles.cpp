#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace oracle {

namespace {

std::vector<zdg::GaussianResidue> elements(Int n, zdg::RingKind kind) {
  std::vector<zdg::GaussianResidue> out;
  for (Int a = 0; a < n; ++a) {
    if (kind == zdg::RingKind::Zn) {
      out.emplace_back(a, 0, n);
      continue;
    }
    for (Int b = 0; b < n; ++b) out.emplace_back(a, b, n);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool zero_divisor(const zdg::GaussianResidue& x, zdg::RingKind kind) {
  if (x.is_zero()) return false;
  for (const auto& y : elements(x.modulus(), kind))
    if (!y.is_zero() && (x * y).is_zero()) return true;
  return false;
}

bool unit(const zdg::GaussianResidue& x, zdg::RingKind kind) {
  const zdg::GaussianResidue one(1, 0, x.modulus());
  for (const auto& y : elements(x.modulus(), kind))
    if (x * y == one) return true;
  return false;
}

std::set<std::size_t> spectrum_dp(const Graph& g) {
  const std::size_t n = g.order();
  std::set<std::size_t> out;
  // reach[mask][v]: a path from s (lowest vertex of mask) through exactly mask, ending at v.
  std::vector<std::vector<char>> reach(std::size_t{1} << n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    for (auto& row : reach) std::fill(row.begin(), row.end(), 0);
    reach[std::size_t{1} << s][s] = 1;
    for (std::size_t mask = std::size_t{1} << s; mask < (std::size_t{1} << n); ++mask) {
      if (!(mask >> s & 1U) || (mask & ((std::size_t{1} << s) - 1))) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (!reach[mask][v]) continue;
        const auto len = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (len >= 3 && g.adjacent(v, s)) out.insert(len);
        for (std::size_t w = s + 1; w < n; ++w)
          if (!(mask >> w & 1U) && g.adjacent(v, w)) reach[mask | (std::size_t{1} << w)][w] = 1;
      }
    }
  }
  return out;
}

std::set<std::size_t> spectrum_permutations(const Graph& g) {
  const std::size_t n = g.order();
  std::set<std::size_t> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    if (vs.size() < 3 || out.count(vs.size())) continue;
    // vs is sorted, so next_permutation walks every ordering.
    do {
      if (valid_cycle(g, vs)) {
        out.insert(vs.size());
        break;
      }
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return out;
}

std::set<std::size_t> spectrum(const Graph& g) {
  return g.order() <= 8 ? spectrum_permutations(g) : spectrum_dp(g);
}

bool valid_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (u >= g.order() || !seen.insert(u).second) return false;
    if (v >= g.order() || u == v || !g.adjacent(u, v)) return false;
  }
  return true;
}

std::size_t components_without(const Graph& g, const std::vector<Vertex>& removed) {
  const std::size_t n = g.order();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone[v] = 1;
  UnionFind uf(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!gone[u] && !gone[v] && g.adjacent(u, v)) uf.unite(u, v);
  std::set<std::size_t> roots;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) roots.insert(uf.find(v));
  return roots.size();
}

std::optional<std::vector<Vertex>> small_cut(const Graph& g, std::size_t max_size) {
  const std::size_t n = g.order();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size > max_size) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1U) s.push_back(v);
    if (components_without(g, s) > size) return s;
  }
  return std::nullopt;
}

bool has_r_graph(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex r = 0; r < n; ++r)
    for (Vertex s = 0; s < n; ++s)
      for (Vertex t = 0; t < n; ++t)
        for (Vertex u = 0; u < n; ++u) {
          if (std::set<Vertex>{r, s, t, u}.size() < 4) continue;
          if (!g.adjacent(r, s) || !g.adjacent(s, t) || !g.adjacent(t, u) || !g.adjacent(u, r)) continue;
          bool dominated = true;
          for (Vertex v = 0; v < n && dominated; ++v)
            if (v != r && v != s && v != t && v != u) dominated = g.adjacent(v, r) || g.adjacent(v, t);
          if (dominated) return true;
        }
  return false;
}

}  // namespace oracle
