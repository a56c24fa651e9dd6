#include <set>

#include "check_support.hpp"
#include "zdg/finite_ring.hpp"

namespace zdg {

namespace {

std::set<std::string> isolated_labels(const Graph& g) {
  std::set<std::string> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.insert(g.label(v));
  return out;
}

json labels_of(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

// The unique component with at least two vertices, or nullopt.
std::optional<Graph> nontrivial_component(ReportBuilder& b, const Graph& g) {
  std::vector<std::vector<Vertex>> big;
  for (auto& c : component_vertex_sets(g))
    if (c.size() > 1) big.push_back(std::move(c));
  b.require("single_nontrivial_component", big.size() == 1, {{"nontrivial_components", big.size()}});
  if (big.size() != 1) return std::nullopt;
  return g.induced(big.front());
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.labels() != b.labels()) return false;
  for (Vertex v = 0; v < a.order(); ++v)
    if (!(a.neighbors(v) == b.neighbors(v))) return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> edge_labels(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
  return out;
}

GaussianResidue gpow(GaussianResidue x, int e) {
  GaussianResidue r(1, 0, x.modulus());
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

// -- R4.ISO ------------------------------------------------------------------------------

void r4_iso(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const int m = static_cast<int>(p.at("m"));
  const bool two = !p.count("q");
  const Int base = two ? 2 : p.at("q");
  const Int n = ipow(base, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const Graph c = complement(g);
  const auto isolated = isolated_labels(c);
  const GaussianResidue gen = two ? gpow(GaussianResidue(1, 1, n), 2 * m - 1) : GaussianResidue(ipow(base, m - 1), 0, n);
  const auto ideal = principal_ideal(gen);
  b.require("isolated_set_is_ideal", isolated == ideal,
            {{"generator", gen.to_string()}, {"isolated", labels_of(isolated)}, {"ideal", labels_of(ideal)}});
  if (two) {
    const Int h = ipow(2, m - 1);
    const std::set<std::string> expected{gaussian_label(h, h, n)};
    b.require("isolated_vertex", isolated == expected, {{"expected", labels_of(expected)}});
  }
  b.evidence("closed-form");
  expect_not_hamiltonian(b, "complement_not_hamiltonian", c, ctx);
}

// -- T4.1 ---------------------------------------------------------------------------------

void t4_1(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  b.evidence("corpus");
  std::size_t scanned = 0, premise = 0;
  for (const auto& entry : implication_corpus(p)) {
    const Graph& g = entry.graph;
    if (g.order() <= 3 || !is_two_connected(g)) continue;
    ++scanned;
    if (!check_fan_condition(g).holds) continue;
    ++premise;
    const auto h = is_hamiltonian(g, {.budget = ctx.budget});
    if (h.verdict == Verdict::Undecided) b.undecided(entry.name, "Hamiltonicity undecided");
    if (h.verdict == Verdict::No) {
      b.witness("graph", entry.name);
      expect_hamiltonian(b, "hamiltonian", g, ctx);
      return;
    }
  }
  b.witness("corpus", {{"graphs", p.at("graphs")}, {"two_connected", scanned}, {"premise_holds", premise}});
}

// -- T4.2 ----------------------------------------------------------------------------------

// j with j^2 = -1 (mod n), n a power of a prime p = 1 (mod 4).
Int sqrt_minus_one(Int n) {
  for (Int j = 2; j < n; ++j)
    if ((j * j + 1) % n == 0) return j;
  throw std::logic_error("no square root of -1 modulo " + std::to_string(n));
}

void t4_2(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(pr, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const Graph c = complement(g);

  if (m == 1) {
    const auto comps = component_vertex_sets(c);
    bool ok = comps.size() == 2;
    for (const auto& comp : comps)
      ok = ok && recognize(c.induced(comp)) ==
                     StructuralClass{StructuralClass::Kind::CompleteK, static_cast<std::size_t>(pr - 1), 0};
    b.require("two_complete_components", ok, {{"components", comps.size()}});
    b.evidence("closed-form");
    expect_not_pancyclic(b, "not_pancyclic", c, ctx);
    return;
  }

  // a + bi -> (a + bj, a - bj) is a ring isomorphism Z_n[i] -> Z_n x Z_n.
  b.note("the vertices (0, s p^(n-1)) and (s p^(n-1), 0) are read with exponent m - 1");
  const Int j = sqrt_minus_one(n);
  const FiniteRing zn = table_ring(make_ring(n, RingKind::Zn));
  const Graph prod = product_ring_graph(zn, zn);
  const auto elements = zero_divisor_set(ring);
  std::vector<Vertex> image(g.order());
  std::vector<std::string> image_label(g.order());
  bool iso = prod.order() == g.order();
  for (Vertex v = 0; iso && v < g.order(); ++v) {
    const Int a = elements[v].re(), bb = elements[v].im();
    image_label[v] = "(" + std::to_string(((a + bb * j) % n + n) % n) + "," +
                     std::to_string(((a - bb * j) % n + n) % n) + ")";
    const auto w = prod.index_of(image_label[v]);
    iso = w.has_value();
    if (w) image[v] = *w;
  }
  json mismatch = nullptr;
  for (Vertex u = 0; iso && u < g.order(); ++u)
    for (Vertex v = u + 1; iso && v < g.order(); ++v)
      if (g.adjacent(u, v) != prod.adjacent(image[u], image[v])) {
        iso = false;
        mismatch = {g.label(u), g.label(v)};
      }
  b.require("product_isomorphism", iso, {{"j", j}, {"mismatch", mismatch}});
  if (!iso) return;

  const std::size_t order = c.order();
  std::set<std::string> low, expected_low;
  for (Vertex v = 0; v < order; ++v)
    if (2 * c.degree(v) < order) low.insert(image_label[v]);
  for (Int s = 1; s < pr; ++s) {
    const Int x = s * ipow(pr, m - 1);
    expected_low.insert("(0," + std::to_string(x) + ")");
    expected_low.insert("(" + std::to_string(x) + ",0)");
  }
  b.hypothesis("low_degree_vertices_as_stated", low == expected_low);
  b.witness("low_degree_vertices", labels_of(low));

  const bool two_connected = is_two_connected(c);
  b.hypothesis("two_connected", two_connected);
  if (two_connected) {
    const auto fan = check_fan_condition(c);
    b.hypothesis("fan_condition", fan.holds);
    if (fan.violating_pair) {
      const auto [u, v] = *fan.violating_pair;
      b.witness("fan_violation", {{"pair", {c.label(u), c.label(v)}},
                                  {"pair_in_product", {image_label[u], image_label[v]}},
                                  {"degrees", {c.degree(u), c.degree(v)}},
                                  {"distance", bfs_distances(c, u)[v]},
                                  {"half_order", order / 2.0}});
    }
  } else {
    b.hypothesis("fan_condition", false);
  }
  const bool bondy = check_bondy_edge_count(c);
  b.hypothesis("bondy_edge_count", bondy);
  b.witness("edge_count", {{"edges", c.size()}, {"quarter_square", order * order / 4.0}});

  expect_hamiltonian(b, "hamiltonian", c, ctx);
  if (ctx.profile == Profile::Extended) {
    b.evidence("full-spectrum");
    expect_pancyclic(b, "pancyclic", c, ctx);
  } else {
    b.evidence("sampled");
    expect_lengths(b, "sampled_lengths", c, sampled_lengths(order), ctx);
  }
}

// -- R4.QM ----------------------------------------------------------------------------------

void r4_qm(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int q = p.at("q");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(q, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  b.note("<q^(n-1)> is read as <q^(m-1)>");
  const auto top = principal_ideal(GaussianResidue(ipow(q, m - 1), 0, n));
  bool all_adjacent = true;
  json gap = nullptr;
  for (Vertex u = 0; all_adjacent && u < g.order(); ++u) {
    if (!top.count(g.label(u))) continue;
    for (Vertex v = 0; all_adjacent && v < g.order(); ++v)
      if (v != u && !g.adjacent(u, v)) {
        all_adjacent = false;
        gap = {g.label(u), g.label(v)};
      }
  }
  b.require("top_ideal_dominates", all_adjacent, {{"ideal", labels_of(top)}, {"non_adjacent", gap}});
  const Graph c = complement(g);
  b.evidence("closed-form");
  expect_not_pancyclic(b, "complement_not_pancyclic", c, ctx);
}

// -- R5.DEG ---------------------------------------------------------------------------------

void r5_deg(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int which = p.at("case");
  b.evidence("closed-form");
  if (which == 1) {
    const Graph g = ctx.gamma(2, RingKind::ZnGaussian);
    b.require("vertex_set", g.labels() == std::vector<std::string>{"1+1i"}, {{"vertices", g.labels()}});
    const Graph c = complement(g);
    b.require("complement_edgeless", c.size() == 0, {{"edges", c.size()}});
    b.require("line_graph_empty", line_graph(c).order() == 0, nullptr);
    return;
  }
  if (which == 2) {
    const Int q = p.at("q");
    const Graph g = ctx.gamma(q * q, RingKind::ZnGaussian);
    const auto lc = line_graph(complement(g));
    require_structure(b, "complete", g, {StructuralClass::Kind::CompleteK, static_cast<std::size_t>(q * q - 1), 0});
    b.require("line_of_complement_empty", lc.order() == 0, {{"order", lc.order()}});
    return;
  }
  const bool two = which == 3;
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(two ? 2 : p.at("q"), m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const Graph c = complement(g);
  b.require("disconnected", !is_connected(c), {{"components", component_count(c)}});
  if (two) {
    const Int h = ipow(2, m - 1);
    const auto isolated = isolated_labels(c);
    b.require("two_components", component_count(c) == 2, {{"components", component_count(c)}});
    b.require("isolated_vertex", isolated == std::set<std::string>{gaussian_label(h, h, n)},
              {{"isolated", labels_of(isolated)}});
  }
  const auto h = nontrivial_component(b, c);
  if (!h) return;
  b.witness("component_order", h->order());
  // L(c) and L(H) coincide as labelled graphs exactly when c and H have the same labelled edges.
  b.require("same_edges_as_component", edge_labels(c) == edge_labels(*h), {{"edges", c.size()}});
  if (c.size() <= kLineGraphLimit)
    b.require("line_graph_equals_component_line_graph", same_labeled_graph(line_graph(c), line_graph(*h)), nullptr);
}

// -- T5.1 / T5.2 ------------------------------------------------------------------------------

void t5_1(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(2, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto h = nontrivial_component(b, complement(g));
  if (!h) return;
  const auto bound = static_cast<std::size_t>(ipow(2, 2 * m - 2));
  std::vector<Vertex> pendants;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) pendants.push_back(h->at(g.label(v)));
  const Graph clique = h->induced(pendants);
  b.hypothesis("pendants_form_clique", clique.order() == bound && recognize(clique) == StructuralClass{
                                                                      StructuralClass::Kind::CompleteK, bound, 0});
  const auto st = stats(*h);
  b.hypothesis("min_degree_bound", st.min_degree >= bound);
  b.witness("component", {{"order", st.order}, {"size", st.size}, {"min_degree", st.min_degree}, {"bound", bound}});
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", *h, ctx);
}

void t5_2(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int q = p.at("q");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(q, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto h = nontrivial_component(b, complement(g));
  if (!h) return;
  b.witness("component", {{"order", h->order()}, {"size", h->size()}, {"structure", recognize(*h).to_string()}});
  check_named_witness(b, *h,
                      {gaussian_label(q, 0, n), gaussian_label(q * q, q, n), gaussian_label(q, q * q, n),
                       gaussian_label(0, q, n)});
  const bool rg = find_r_graph(b, *h);
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", *h, ctx, rg);
}

}  // namespace

void register_complement_checks(std::vector<TheoremCheck>& out) {
  out.push_back({"R4.ISO", "the complement of Gamma(Z_{2^m}[i]) or Gamma(Z_{q^m}[i]) has isolated vertices",
                 Direction::If, {"q", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"m", 2}}},
                                       {{{"m", 2}}, {{"m", 3}}, {{"q", 3}, {"m", 2}}, {{"q", 3}, {"m", 3}}},
                                       {{{"m", 4}}, {{"q", 7}, {"m", 2}}});
                 },
                 [](const Params& p) {
                   if (p.count("q")) {
                     admit_keys(p, {"q", "m"});
                     admit(is_prime(p.at("q")) && p.at("q") % 4 == 3, "q must be a prime with q = 3 (mod 4)");
                     admit(p.at("m") >= 2 && ipow(p.at("q"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                           "m must be >= 2 with q^(2m) <= 10^6");
                   } else {
                     admit_keys(p, {"m"});
                     admit(p.at("m") >= 2 && p.at("m") <= 5, "m must be in 2..5");
                   }
                 },
                 r4_iso});
  out.push_back({"T4.1", "2-connected with d(u,v) = 2 => max(deg u, deg v) >= n/2 implies Hamiltonian",
                 Direction::If, {"graphs"}, corpus_grid, admit_corpus, t4_1});
  out.push_back({"T4.2", "the complement of Gamma(Z_{p^m}[i]) is pancyclic for m > 1", Direction::If, {"p", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 5}, {"m", 1}}}, {{{"p", 5}, {"m", 1}}, {{"p", 5}, {"m", 2}}},
                                       {{{"p", 13}, {"m", 1}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"p", "m"});
                   admit(is_prime(p.at("p")) && p.at("p") % 4 == 1, "p must be a prime with p = 1 (mod 4)");
                   admit(p.at("m") >= 1 && ipow(p.at("p"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 1 with p^(2m) <= 10^6");
                 },
                 t4_2});
  out.push_back({"R4.QM", "the complement of Gamma(Z_{q^m}[i]) is never pancyclic", Direction::If, {"q", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"q", 3}, {"m", 2}}},
                                       {{{"q", 3}, {"m", 2}}, {{"q", 3}, {"m", 3}}, {{"q", 7}, {"m", 2}}},
                                       {{{"q", 3}, {"m", 4}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"q", "m"});
                   admit(is_prime(p.at("q")) && p.at("q") % 4 == 3, "q must be a prime with q = 3 (mod 4)");
                   admit(p.at("m") >= 2 && ipow(p.at("q"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 2 with q^(2m) <= 10^6");
                 },
                 r4_qm});
  out.push_back({"R5.DEG", "degenerate complements and their line graphs", Direction::If, {"case", "q", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"case", 1}}, {{"case", 3}, {"m", 2}}},
                                       {{{"case", 1}},
                                        {{"case", 2}, {"q", 3}},
                                        {{"case", 2}, {"q", 7}},
                                        {{"case", 3}, {"m", 2}},
                                        {{"case", 3}, {"m", 3}},
                                        {{"case", 4}, {"q", 3}, {"m", 3}}},
                                       {{{"case", 3}, {"m", 4}}, {{"case", 4}, {"q", 7}, {"m", 3}}});
                 },
                 [](const Params& p) {
                   admit(p.count("case") != 0, "R5.DEG needs a case in 1..4");
                   switch (p.at("case")) {
                     case 1: admit_keys(p, {"case"}); break;
                     case 2:
                       admit_keys(p, {"case", "q"});
                       admit(is_prime(p.at("q")) && p.at("q") % 4 == 3 && p.at("q") <= 31,
                             "q must be a prime <= 31 with q = 3 (mod 4)");
                       break;
                     case 3:
                       admit_keys(p, {"case", "m"});
                       admit(p.at("m") >= 2 && p.at("m") <= 5, "m must be in 2..5");
                       break;
                     case 4:
                       admit_keys(p, {"case", "q", "m"});
                       admit(is_prime(p.at("q")) && p.at("q") % 4 == 3, "q must be a prime with q = 3 (mod 4)");
                       admit(p.at("m") >= 3 && ipow(p.at("q"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                             "m must be >= 3 with q^(2m) <= 10^6");
                       break;
                     default: admit(false, "case must be in 1..4");
                   }
                 },
                 r5_deg});
  out.push_back({"T5.1", "L(complement of Gamma(Z_{2^m}[i])) is pancyclic for m >= 2", Direction::If, {"m"},
                 [](Profile pr) { return profile_grid(pr, {{{"m", 2}}}, {{{"m", 2}}, {{"m", 3}}}, {{{"m", 4}}}); },
                 [](const Params& p) {
                   admit_keys(p, {"m"});
                   admit(p.at("m") >= 2 && p.at("m") <= 5, "m must be in 2..5");
                 },
                 t5_1});
  out.push_back({"T5.2", "L(complement of Gamma(Z_{q^m}[i])) is pancyclic for m >= 3", Direction::If, {"q", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"q", 3}, {"m", 3}}}, {{{"q", 3}, {"m", 3}}}, {{{"q", 3}, {"m", 4}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"q", "m"});
                   admit(is_prime(p.at("q")) && p.at("q") % 4 == 3, "q must be a prime with q = 3 (mod 4)");
                   admit(p.at("m") >= 3 && ipow(p.at("q"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 3 with q^(2m) <= 10^6");
                 },
                 t5_2});
}

}  // namespace zdg
