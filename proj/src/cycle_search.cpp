// Exact anchored DFS for fixed-length cycles, plus the rotation-extension
// heuristic and chord/insertion derivation used to seed spectra.

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "zdg/cycles.hpp"

namespace zdg {

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3 || k > g.order()) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : cycle) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

// Vertices of the 2-core: every cycle lives inside it.
VertexSet two_core(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet alive(n, true);
  auto deg = g.degrees();
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] < 2) stack.push_back(v);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!alive.test(v)) continue;
    alive.reset(v);
    g.neighbors(v).for_each([&](Vertex w) {
      if (alive.test(w) && --deg[w] < 2) stack.push_back(w);
    });
  }
  return alive;
}

std::vector<std::size_t> restricted_distances(const Graph& g, Vertex source, const VertexSet& allowed,
                                              std::size_t& reached) {
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  VertexSet unseen = allowed;
  unseen.reset(source);
  dist[source] = 0;
  reached = 1;
  std::vector<Vertex> frontier{source}, next;
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (Vertex u : frontier) {
      VertexSet nb = g.neighbors(u) & unseen;
      nb.for_each([&](Vertex w) {
        unseen.reset(w);
        dist[w] = d;
        next.push_back(w);
      });
    }
    reached += next.size();
    std::swap(frontier, next);
  }
  return dist;
}

}  // namespace

CycleSearchResult has_cycle_of_length(const Graph& g, std::size_t k, std::uint64_t budget) {
  const std::size_t n = g.order();
  if (k < 3 || k > n)
    throw std::out_of_range("cycle length " + std::to_string(k) + " outside 3.." + std::to_string(n));
  CycleSearchResult result;
  if (k % 2 == 1 && bipartition(g)) return result;

  const VertexSet core = two_core(g);
  if (core.count() < k) return result;

  struct Frame {
    VertexSet cand;
    std::size_t pos = 0;
  };
  std::vector<Frame> frames(k);
  Cycle path;
  path.reserve(k);

  for (Vertex anchor = core.find_first(); anchor < n; anchor = core.find_next(anchor + 1)) {
    // The anchor is the minimum vertex of the cycle.
    VertexSet allowed = core;
    for (Vertex v = 0; v < anchor; ++v) allowed.reset(v);
    std::size_t reached = 0;
    const auto dist = restricted_distances(g, anchor, allowed, reached);
    if (reached < k) continue;

    VertexSet visited(n);
    visited.set(anchor);
    path.assign(1, anchor);
    frames[0].cand = g.neighbors(anchor) & allowed;
    frames[0].pos = 0;
    std::size_t depth = 0;

    while (true) {
      Frame& f = frames[depth];
      const Vertex w = f.cand.find_next(f.pos);
      if (w >= n) {
        if (depth == 0) break;
        visited.reset(path.back());
        path.pop_back();
        --depth;
        continue;
      }
      f.pos = w + 1;
      if (visited.test(w)) continue;
      const std::size_t len = path.size() + 1;  // path length once w is appended
      if (dist[w] > k - len + 1) continue;
      if (++result.expansions > budget) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
      }
      if (len == k) {
        // Closing edge, and path[1] < last kills the reflected duplicate.
        if (g.adjacent(w, anchor) && path[1] < w) {
          path.push_back(w);
          result.status = SearchStatus::Found;
          result.cycle = path;
          return result;
        }
        continue;
      }
      path.push_back(w);
      visited.set(w);
      ++depth;
      frames[depth].cand = g.neighbors(w) & allowed;
      frames[depth].pos = 0;
    }
  }
  return result;
}

std::optional<Cycle> find_long_cycle(const Graph& g, std::uint64_t seed, std::size_t max_steps) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  const VertexSet core = two_core(g);
  const auto core_vertices = core.to_vector();
  if (core_vertices.size() < 3) return std::nullopt;
  if (max_steps == 0) max_steps = 100 * n + 10'000;

  std::mt19937_64 rng(seed);
  std::optional<Cycle> best;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(n, kNone);
  Cycle path;
  VertexSet in_path(n);

  auto reset_path = [&](Vertex start) {
    for (Vertex v : path) pos[v] = kNone;
    path.assign(1, start);
    in_path = VertexSet(n);
    in_path.set(start);
    pos[start] = 0;
  };
  auto push = [&](Vertex w) {
    pos[w] = path.size();
    path.push_back(w);
    in_path.set(w);
  };
  auto reindex = [&](std::size_t from) {
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = i;
  };

  std::size_t steps = 0;
  constexpr int kRestarts = 6;
  for (int restart = 0; restart < kRestarts && steps < max_steps; ++restart) {
    reset_path(core_vertices[rng() % core_vertices.size()]);
    std::size_t stale = 0;
    while (steps++ < max_steps && stale < 4 * n + 100) {
      const Vertex v = path.back();
      VertexSet cand = g.neighbors(v) & core;
      cand.subtract(in_path);
      if (!cand.none()) {
        // Warnsdorff choice among a bounded random sample of candidates.
        const auto options = cand.to_vector();
        const std::size_t sample = std::min<std::size_t>(options.size(), 16);
        const std::size_t offset = rng() % options.size();
        Vertex pick = options[offset];
        std::size_t pick_free = kNone;
        for (std::size_t s = 0; s < sample; ++s) {
          const Vertex w = options[(offset + s) % options.size()];
          VertexSet free = g.neighbors(w) & core;
          free.subtract(in_path);
          const std::size_t c = free.count();
          if (c < pick_free) {
            pick_free = c;
            pick = w;
          }
        }
        push(pick);
        stale = 0;
        continue;
      }
      const std::size_t len = path.size();
      if (len >= 3 && g.adjacent(v, path.front())) {
        if (!best || best->size() < len) {
          best = path;
          stale = 0;
        }
        if (len == n) return best;
        // Open the cycle next to a vertex outside it and extend.
        VertexSet outside = core;
        outside.subtract(in_path);
        const std::size_t start = rng() % len;
        bool extended = false;
        for (std::size_t s = 0; s < len && !extended; ++s) {
          const std::size_t i = (start + s) % len;
          const Vertex x = (g.neighbors(path[i]) & outside).find_first();
          if (x >= n) continue;
          std::rotate(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i + 1), path.end());
          reindex(0);
          push(x);
          extended = true;
        }
        if (!extended) break;  // the cycle spans its component of the core
        continue;
      }
      // Posa rotation: v ~ path[j] makes path[j+1] the new end.
      std::vector<std::size_t> pivots;
      (g.neighbors(v) & in_path).for_each([&](Vertex w) {
        if (pos[w] + 2 < len) pivots.push_back(pos[w]);
      });
      if (pivots.empty()) break;
      const std::size_t j = pivots[rng() % pivots.size()];
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(j + 1), path.end());
      reindex(j + 1);
      ++stale;
    }
  }
  return best;
}

std::map<std::size_t, Cycle> derive_cycles(const Graph& g, const Cycle& cycle, const std::set<std::size_t>& wanted) {
  std::map<std::size_t, Cycle> out;
  const std::size_t k = cycle.size();
  if (k < 3) return out;
  for (std::size_t t : wanted) {
    if (t < 3 || t >= k) continue;
    // A chord c_i c_{i+t-1} closes the arc c_i..c_{i+t-1} into a t-cycle.
    const std::size_t span = t - 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (!g.adjacent(cycle[i], cycle[(i + span) % k])) continue;
      Cycle c;
      c.reserve(t);
      for (std::size_t s = 0; s <= span; ++s) c.push_back(cycle[(i + s) % k]);
      out.emplace(t, std::move(c));
      break;
    }
  }
  if (wanted.count(k + 1) && k < g.order()) {
    VertexSet on(g.order());
    for (Vertex v : cycle) on.set(v);
    for (std::size_t i = 0; i < k; ++i) {
      VertexSet common = g.neighbors(cycle[i]) & g.neighbors(cycle[(i + 1) % k]);
      common.subtract(on);
      const Vertex x = common.find_first();
      if (x >= g.order()) continue;
      Cycle c(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i + 1));
      c.push_back(x);
      c.insert(c.end(), cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), cycle.end());
      out.emplace(k + 1, std::move(c));
      break;
    }
  }
  return out;
}

}  // namespace zdg
