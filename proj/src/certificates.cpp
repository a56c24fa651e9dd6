#include "zdg/certificates.hpp"

#include <algorithm>
#include <numeric>

namespace zdg {

namespace {

VertexSet as_set(const Graph& g, const std::vector<Vertex>& vs) {
  VertexSet s(g.order());
  for (Vertex v : vs) s.set(v);
  return s;
}

std::optional<CutCertificate> try_set(const Graph& g, std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || s.size() >= g.order()) return std::nullopt;
  const std::size_t c = components_after_removal(g, as_set(g, s));
  if (c > s.size()) return CutCertificate{std::move(s), c};
  return std::nullopt;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

bool validate_certificate(const Graph& g, const CutCertificate& cert) {
  if (cert.cut_set.empty() || cert.cut_set.size() >= g.order()) return false;
  for (Vertex v : cert.cut_set)
    if (v >= g.order()) return false;
  const VertexSet s = as_set(g, cert.cut_set);
  if (s.count() != cert.cut_set.size()) return false;
  const std::size_t c = components_after_removal(g, s);
  return c == cert.components_after && c > cert.cut_set.size();
}

std::optional<CutCertificate> find_cut_certificate(const Graph& g, const CutStrategies& strategies) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;

  for (const auto& cand : strategies.candidates)
    if (auto c = try_set(g, cand)) return c;

  for (std::size_t k = 1; k <= strategies.max_subset_size && k < n; ++k) {
    if (binomial_capped(n, k, strategies.max_subsets) > strategies.max_subsets) break;
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (auto c = try_set(g, idx)) return c;
      // next k-combination of 0..n-1
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  if (strategies.neighborhoods) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto deg = g.degrees();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
    for (Vertex v : order)
      if (auto c = try_set(g, g.neighbors(v).to_vector())) return c;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> zn_family_cut_candidates(const Graph& gamma_zn, Int n) {
  std::vector<std::vector<Vertex>> out;
  const auto factors = factorize(n);
  auto collect = [&](Int step, Int count) {
    std::vector<Vertex> s;
    for (Int a = 1; a <= count; ++a)
      if (auto v = gamma_zn.index_of(std::to_string((a * step) % n))) s.push_back(*v);
    if (!s.empty()) out.push_back(std::move(s));
  };
  const bool squarefree =
      std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.exponent == 1; });
  if (squarefree && factors.size() >= 2) {
    const Int p1 = factors.front().prime;
    collect(n / p1, p1 - 1);
  }
  if (factors.size() == 1 && factors[0].exponent >= 3) {
    const Int p = factors[0].prime;
    collect(n / p, p - 1);
  }
  if (factors.size() == 2 && factors[0].exponent == 2 && factors[1].exponent == 2) {
    const Int p = factors[0].prime, q = factors[1].prime;
    collect(p * q * q, p - 1);
  }
  return out;
}

}  // namespace zdg
