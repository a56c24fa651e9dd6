#include <set>

#include "check_support.hpp"

namespace zdg {

namespace {

// -- corpus implications -----------------------------------------------------------

SpectrumOptions budgeted(const CheckContext& ctx) {
  SpectrumOptions o;
  o.budget = ctx.budget;
  return o;
}

struct CorpusTally {
  std::size_t premise = 0;
  std::size_t scanned = 0;
};

void corpus_witness(ReportBuilder& b, const Params& p, const CorpusTally& t) {
  b.witness("corpus", {{"graphs", p.at("graphs")}, {"scanned", t.scanned}, {"premise_holds", t.premise}});
}

void p3_1(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  b.evidence("corpus");
  CorpusTally t;
  for (const auto& entry : implication_corpus(p)) {
    const Graph& g = entry.graph;
    if (g.order() < 4 || !is_connected(g)) continue;
    ++t.scanned;
    if (!check_line_pancyclic_condition(g).holds) continue;
    ++t.premise;
    const Graph lg = line_graph(g);
    const auto v = is_pancyclic(lg, budgeted(ctx));
    if (v.verdict == Verdict::Undecided) b.undecided(entry.name, "line graph pancyclicity undecided");
    if (v.verdict == Verdict::No) {
      b.witness("graph", entry.name);
      expect_pancyclic(b, "line_graph_pancyclic", lg, ctx);
      return;
    }
  }
  corpus_witness(b, p, t);
}

void c3_2(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  b.evidence("corpus");
  CorpusTally t;
  for (const auto& entry : implication_corpus(p)) {
    const Graph& g = entry.graph;
    ++t.scanned;
    if (!check_diameter_condition(g)) continue;
    ++t.premise;
    const Graph lg = line_graph(g);
    const auto h = is_hamiltonian(lg, {.budget = ctx.budget});
    if (h.verdict == Verdict::Undecided) b.undecided(entry.name, "line graph Hamiltonicity undecided");
    if (h.verdict == Verdict::No) {
      b.witness("graph", entry.name);
      expect_hamiltonian(b, "line_graph_hamiltonian", lg, ctx);
      return;
    }
  }
  corpus_witness(b, p, t);
}

void l3_6(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  b.evidence("corpus");
  CorpusTally t;
  for (const auto& entry : implication_corpus(p)) {
    const Graph& g = entry.graph;
    if (g.order() < 5) continue;
    ++t.scanned;
    const auto w = is_r_graph(g);
    if (!w) continue;
    ++t.premise;
    if (!validate_r_graph(g, *w)) {
      b.require("r_graph_witness_valid", false, {{"graph", entry.name}, {"witness", r_graph_json(g, *w)}});
      return;
    }
    const Graph lg = line_graph(g);
    const auto v = is_pancyclic(lg, budgeted(ctx));
    if (v.verdict == Verdict::Undecided) b.undecided(entry.name, "line graph pancyclicity undecided");
    if (v.verdict == Verdict::No) {
      b.witness("graph", entry.name);
      b.witness("r_graph", r_graph_json(g, *w));
      expect_pancyclic(b, "line_graph_pancyclic", lg, ctx);
      return;
    }
  }
  corpus_witness(b, p, t);
}

// -- T3.3 ------------------------------------------------------------------------------

void t3_3(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p"), q = p.at("q");
  const RingSpec ring = make_ring(pr * q, RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto k = static_cast<std::size_t>(q - 1);
  if (pr == 2) {
    require_structure(b, "star", g, {StructuralClass::Kind::Star, k, 0});
    const Graph lg = line_graph(g);
    require_structure(b, "line_graph_complete", lg, {StructuralClass::Kind::CompleteK, k, 0});
    b.evidence("closed-form");
    expect_pancyclic(b, "line_graph_pancyclic", lg, ctx);
    return;
  }
  require_structure(b, "complete_bipartite", g,
                    {StructuralClass::Kind::CompleteBipartite, static_cast<std::size_t>(pr - 1), k});
  b.hypothesis("diameter_at_most_2", check_diameter_condition(g));
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx);
}

// -- T3.4 ------------------------------------------------------------------------------

void t3_4(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const RingSpec ring = make_ring(ipow(pr, m), RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  if (m == 2) require_structure(b, "complete", g, {StructuralClass::Kind::CompleteK, static_cast<std::size_t>(pr - 1), 0});
  b.hypothesis("bridgeless", bridges(g).empty());
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx);
}

// -- T3.7 ------------------------------------------------------------------------------------

void t3_7(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(2, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  if (m == 2) {
    const Graph lg = line_graph(g);
    b.require("line_graph_order", lg.order() == 7, {{"expected", 7}, {"actual", lg.order()}});
    SpectrumOptions o;
    o.budget = ctx.budget;
    o.use_shortcuts = false;
    const auto s = cycle_spectrum(lg, o);
    std::set<std::size_t> all;
    for (std::size_t k = 3; k <= lg.order(); ++k) all.insert(k);
    b.evidence("full-spectrum");
    if (!s.exhaustive()) {
      b.witness("line_graph_spectrum", spectrum_json(s));
      b.undecided("line_graph_spectrum", "search budget exhausted");
    } else {
      b.require("line_graph_spectrum", s.present() == all, spectrum_json(s));
    }
    return;
  }
  b.note("named vertices 2^(n-1) + i 2^(n-1), 2^(n-1), 2, i 2^(n-1) are read with n = m");
  const Int h = ipow(2, m - 1);
  check_named_witness(b, g,
                      {gaussian_label(h, h, n), gaussian_label(h, 0, n), gaussian_label(2, 0, n), gaussian_label(0, h, n)});
  const bool rg = find_r_graph(b, g);
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx, rg);
}

// -- T3.8 ------------------------------------------------------------------------------------

void t3_8(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int q = p.at("q");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(q, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  if (m == 2) {
    require_structure(b, "complete", g, {StructuralClass::Kind::CompleteK, static_cast<std::size_t>(q * q - 1), 0});
    expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx);
    return;
  }
  const Int top = ipow(q, m - 1), mid = ipow(q, (m + 1) / 2);
  check_named_witness(b, g,
                      {gaussian_label(top, 0, n), gaussian_label(mid, 0, n), gaussian_label(0, mid, n),
                       gaussian_label(0, top, n)});
  if (top == mid)
    b.note("the named witness is degenerate here: q^(m-1) = q^ceil(m/2), so r = s and t = u; "
           "a searched R-graph witness is used instead");
  const bool rg = find_r_graph(b, g);
  expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx, rg);
}

// -- T3.9 ------------------------------------------------------------------------------------

void t3_9(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const RingSpec ring = make_ring(ipow(pr, m), RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  if (m == 1) {
    const auto k = static_cast<std::size_t>(pr - 1);
    require_structure(b, "complete_bipartite", g, {StructuralClass::Kind::CompleteBipartite, k, k});
    expect_line_graph_pancyclic(b, "line_graph_pancyclic", g, ctx);
    return;
  }
  if (g.size() > kLineGraphLimit) {
    b.witness("line_graph_order", g.size());
    b.undecided("line_graph_not_pancyclic", "line graph too large to search");
    return;
  }
  b.evidence("full-spectrum");
  expect_not_pancyclic(b, "line_graph_not_pancyclic", line_graph(g), ctx);
}

void admit_line_pm(const Params& p) {
  admit_keys(p, {"p", "m"});
  admit(is_prime(p.at("p")) && p.at("p") > 3, "p must be a prime > 3");
  admit(p.at("m") == 2 || p.at("m") == 3, "m must be 2 or 3");
  admit(p.at("p") <= 11, "p must be at most 11");
}

}  // namespace

void register_line_checks(std::vector<TheoremCheck>& out) {
  out.push_back({"P3.1", "edge-degree condition implies a pancyclic line graph", Direction::If, {"graphs"},
                 corpus_grid, admit_corpus, p3_1});
  out.push_back({"C3.2", "diameter at most 2 on at least 4 vertices implies a Hamiltonian line graph", Direction::If,
                 {"graphs"}, corpus_grid, admit_corpus, c3_2});
  out.push_back({"T3.3", "L(Gamma(Z_pq)) is pancyclic for primes p < q", Direction::If, {"p", "q"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 2}, {"q", 7}}},
                                       {{{"p", 2}, {"q", 7}}, {{"p", 2}, {"q", 11}}, {{"p", 3}, {"q", 5}}},
                                       {{{"p", 2}, {"q", 13}}, {{"p", 3}, {"q", 7}}, {{"p", 5}, {"q", 7}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"p", "q"});
                   admit(is_prime(p.at("p")) && is_prime(p.at("q")) && p.at("p") < p.at("q"),
                         "p < q must be distinct primes");
                   admit(!(p.at("p") == 2 && p.at("q") == 3), "p = 2 needs q > 3: L(Gamma(Z_6)) = K_2 has no cycle");
                   admit(p.at("p") * p.at("q") <= 1000, "p q must be at most 1000");
                 },
                 t3_3});
  out.push_back({"T3.4", "L(Gamma(Z_{p^m})) is pancyclic for primes p > 3 and m in {2, 3}", Direction::If,
                 {"p", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 5}, {"m", 2}}},
                                       {{{"p", 5}, {"m", 2}}, {{"p", 5}, {"m", 3}}, {{"p", 7}, {"m", 2}},
                                        {{"p", 7}, {"m", 3}}},
                                       {{{"p", 11}, {"m", 2}}, {{"p", 11}, {"m", 3}}});
                 },
                 admit_line_pm, t3_4});
  out.push_back({"L3.6", "an R-graph on at least 5 vertices has a pancyclic line graph", Direction::If, {"graphs"},
                 corpus_grid, admit_corpus, l3_6});
  out.push_back({"T3.7", "L(Gamma(Z_{2^m}[i])) is pancyclic for m >= 2", Direction::If, {"m"},
                 [](Profile pr) { return profile_grid(pr, {{{"m", 2}}}, {{{"m", 2}}, {{"m", 3}}}, {{{"m", 4}}}); },
                 [](const Params& p) {
                   admit_keys(p, {"m"});
                   admit(p.at("m") >= 2 && p.at("m") <= 5, "m must be in 2..5");
                 },
                 t3_7});
  out.push_back({"T3.8", "L(Gamma(Z_{q^m}[i])) is pancyclic for m >= 2", Direction::If, {"q", "m"},
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
                 t3_8});
  out.push_back({"T3.9", "L(Gamma(Z_{p^m}[i])) is pancyclic iff m = 1", Direction::Iff, {"p", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 5}, {"m", 1}}}, {{{"p", 5}, {"m", 1}}, {{"p", 13}, {"m", 1}}},
                                       {{{"p", 5}, {"m", 2}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"p", "m"});
                   admit(is_prime(p.at("p")) && p.at("p") % 4 == 1, "p must be a prime with p = 1 (mod 4)");
                   admit(p.at("m") >= 1 && ipow(p.at("p"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 1 with p^(2m) <= 10^6");
                 },
                 t3_9});
}

}  // namespace zdg
