#include <algorithm>
#include <set>

#include "check_support.hpp"
#include "zdg/certificates.hpp"
#include "zdg/finite_ring.hpp"

namespace zdg {

namespace {

json count_json(std::size_t expected, std::size_t actual) { return {{"expected", expected}, {"actual", actual}}; }

std::set<std::string> label_set(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(g.label(v));
  return out;
}

void admit_inert(Int q) { admit(is_prime(q) && q % 4 == 3, "q must be a prime with q = 3 (mod 4)"); }
void admit_split(Int p) { admit(is_prime(p) && p % 4 == 1, "p must be a prime with p = 1 (mod 4)"); }

void note_small_prime(ReportBuilder& b) {
  b.note("p in {2, 3} is excluded: Gamma(Z_4) = K_1 and Gamma(Z_9) = K_2 have no cycles, so the statement "
         "degenerates there and the grid starts at p = 5");
}

// -- T2.1 -------------------------------------------------------------------------

void t2_1(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const int m = static_cast<int>(p.at("m"));
  const RingSpec ring = make_ring(ipow(2, m), RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto order = static_cast<std::size_t>(ipow(2, 2 * m - 1) - 1);
  const auto pendants = static_cast<std::size_t>(ipow(2, 2 * m - 2));
  b.require("order", g.order() == order, count_json(order, g.order()));
  b.require("pendant_count", stats(g).pendant_count == pendants, count_json(pendants, stats(g).pendant_count));
  if (g.order() <= 12) {
    const auto r = has_cycle_of_length(g, g.order(), ctx.budget);
    b.evidence("exhaustive");
    json detail = {{"length", g.order()}, {"status", to_string(r.status)}, {"expansions", r.expansions}};
    if (r.status == SearchStatus::Found) detail["cycle"] = cycle_json(g, r.cycle);
    if (r.status == SearchStatus::BudgetExhausted) {
      b.witness("top_length_absent", detail);
      b.undecided("top_length_absent", "search budget exhausted");
    } else {
      b.require("top_length_absent", r.status == SearchStatus::NotFound, detail);
    }
  } else {
    b.evidence("certificate");
  }
  expect_not_pancyclic(b, "not_pancyclic", g, ctx);
}

// -- T2.2 -------------------------------------------------------------------------

void t2_2(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int q = p.at("q");
  const int m = static_cast<int>(p.at("m"));
  const RingSpec ring = make_ring(ipow(q, m), RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto order = static_cast<std::size_t>(ipow(q, 2 * m - 2) - 1);
  b.require("order", g.order() == order, count_json(order, g.order()));
  if (m == 2) {
    b.evidence("closed-form");
    require_structure(b, "complete", g, {StructuralClass::Kind::CompleteK, order, 0});
    expect_pancyclic(b, "pancyclic", g, ctx);
  } else {
    b.evidence(m == 1 ? "closed-form" : "certificate");
    expect_not_pancyclic(b, "not_pancyclic", g, ctx);
  }
}

// -- T2.3 -------------------------------------------------------------------------

void t2_3(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(pr, m);
  const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto order = static_cast<std::size_t>(2 * ipow(pr, 2 * m - 1) - ipow(pr, 2 * m - 2) - 1);
  b.require("order", g.order() == order, count_json(order, g.order()));
  if (m == 1) {
    const auto k = static_cast<std::size_t>(pr - 1);
    require_structure(b, "complete_bipartite", g, {StructuralClass::Kind::CompleteBipartite, k, k});
    const auto& split = ring.classes.at(0);
    const auto v1 = principal_ideal(GaussianResidue(split.a, split.b, n));
    const auto v2 = principal_ideal(GaussianResidue(split.a, n - split.b, n));
    const auto parts = bipartition(g);
    bool parts_ok = false;
    if (parts) {
      const auto s1 = label_set(g, parts->smaller), s2 = label_set(g, parts->larger);
      parts_ok = (s1 == v1 && s2 == v2) || (s1 == v2 && s2 == v1);
    }
    b.require("parts_are_ideals", parts_ok,
              {{"generators", {gaussian_label(split.a, split.b, n), gaussian_label(split.a, n - split.b, n)}}});

    // Searched without closed forms so the spectrum is independent of the recognizer.
    SpectrumOptions o;
    o.budget = ctx.budget;
    o.use_shortcuts = false;
    const auto s = cycle_spectrum(g, o);
    std::set<std::size_t> even;
    for (std::size_t len = 4; len <= 2 * k; len += 2) even.insert(len);
    b.evidence("full-spectrum");
    if (!s.exhaustive()) {
      b.witness("spectrum", spectrum_json(s));
      b.undecided("spectrum", "search budget exhausted");
    } else {
      b.require("spectrum", s.present() == even, spectrum_json(s));
    }
    expect_bipancyclic(b, "bipancyclic", g, ctx);
  } else {
    b.evidence("certificate");
    expect_not_bipancyclic(b, "not_bipancyclic", g, ctx);
  }
}

// -- Remark on Gamma(Z_{q1 q2}[i]) -----------------------------------------------

void r2_q1q2(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int q1 = p.at("q1"), q2 = p.at("q2");
  const RingSpec ring = make_ring(q1 * q2, RingKind::ZnGaussian);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const StructuralClass expected{StructuralClass::Kind::CompleteBipartite, static_cast<std::size_t>(q1 * q1 - 1),
                                 static_cast<std::size_t>(q2 * q2 - 1)};
  require_structure(b, "complete_bipartite", g, expected);

  // Gamma(Z_q1[i] x Z_q2[i]) through the CRT map must be the same graph.
  const Graph prod = product_ring_graph(table_ring(make_ring(q1, RingKind::ZnGaussian)),
                                        table_ring(make_ring(q2, RingKind::ZnGaussian)));
  require_structure(b, "product_complete_bipartite", prod, expected);
  bool iso = prod.order() == g.order();
  json mismatch = nullptr;
  std::vector<Vertex> image(g.order());
  const auto elements = zero_divisor_set(ring);
  for (Vertex v = 0; iso && v < g.order(); ++v) {
    const auto parts = crt_decompose(elements[v], ring);
    const auto w = prod.index_of("(" + parts[0].to_string() + "," + parts[1].to_string() + ")");
    iso = w.has_value();
    if (w) image[v] = *w;
  }
  for (Vertex u = 0; iso && u < g.order(); ++u)
    for (Vertex v = u + 1; iso && v < g.order(); ++v)
      if (g.adjacent(u, v) != prod.adjacent(image[u], image[v])) {
        iso = false;
        mismatch = {g.label(u), g.label(v)};
      }
  b.require("crt_isomorphism", iso, mismatch.is_null() ? json(nullptr) : json{{"pair", mismatch}});

  b.evidence("closed-form");
  expect_not_hamiltonian(b, "not_hamiltonian", g, ctx);
  expect_not_pancyclic(b, "not_pancyclic", g, ctx);
  expect_not_bipancyclic(b, "not_bipancyclic", g, ctx);
}

// -- P2.4 -----------------------------------------------------------------------------

// Exhaustive over all nonempty proper S on small graphs.
std::optional<CutCertificate> any_certificate(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(n);
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1U) {
        s.set(v);
        cut.push_back(v);
      }
    const auto c = components_after_removal(g, s);
    if (c > cut.size()) return CutCertificate{cut, c};
  }
  return std::nullopt;
}

void p2_4(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  std::size_t hamiltonian = 0, certified = 0;
  b.evidence("corpus");
  for (const auto& entry : implication_corpus(p)) {
    const Graph& g = entry.graph;
    if (g.order() < 3) continue;
    HamiltonOptions o;
    o.budget = ctx.budget;
    const auto h = is_hamiltonian(g, o);
    if (h.verdict == Verdict::Undecided) {
      b.undecided("corpus", entry.name + ": Hamiltonicity undecided");
      continue;
    }
    if (h.certificate && !validate_certificate(g, *h.certificate)) {
      b.require("certificates_valid", false, {{"graph", entry.name}, {"certificate", certificate_json(g, *h.certificate)}});
      return;
    }
    if (h.verdict != Verdict::Yes) continue;
    ++hamiltonian;
    if (auto cert = any_certificate(g)) {
      b.require("no_certificate_on_hamiltonian", false,
                {{"graph", entry.name}, {"cycle", cycle_json(g, h.cycle)}, {"certificate", certificate_json(g, *cert)}});
      return;
    }
    ++certified;
  }
  b.witness("corpus", {{"graphs", p.at("graphs")}, {"hamiltonian", hamiltonian}, {"subset_scans", certified}});
}

// -- L2.5 -------------------------------------------------------------------------------

// Records whether the first family cut set is itself a certificate.
bool check_prescribed_set(ReportBuilder& b, const Graph& g, const std::vector<std::vector<Vertex>>& candidates) {
  bool ok = false;
  if (!candidates.empty()) {
    VertexSet s(g.order());
    for (Vertex v : candidates.front()) s.set(v);
    const CutCertificate c{candidates.front(), components_after_removal(g, s)};
    ok = validate_certificate(g, c);
    b.witness("prescribed_set", certificate_json(g, c));
  }
  b.hypothesis("prescribed_set_certifies", ok);
  return ok;
}

void l2_5(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int n = p.at("n");
  const RingSpec ring = make_ring(n, RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto candidates = zn_family_cut_candidates(g, n);
  if (!check_prescribed_set(b, g, candidates))
    b.note("the prescribed cut set does not certify here; a searched certificate is used instead");
  b.evidence("certificate");
  expect_not_hamiltonian(b, "not_hamiltonian", g, ctx, {.candidates = candidates});
}

// -- L2.6 / T2.7 --------------------------------------------------------------------------

void l2_6(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const Int n = ipow(pr, m);
  const RingSpec ring = make_ring(n, RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  note_small_prime(b);
  if (m == 2) {
    b.evidence("witness");
    expect_hamiltonian(b, "hamiltonian", g, ctx);
  } else {
    b.evidence("certificate");
    expect_not_hamiltonian(b, "not_hamiltonian", g, ctx, {.candidates = zn_family_cut_candidates(g, n)});
  }
}

void t2_7(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p");
  const int m = static_cast<int>(p.at("m"));
  const RingSpec ring = make_ring(ipow(pr, m), RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  note_small_prime(b);
  if (m == 2) {
    b.evidence("closed-form");
    require_structure(b, "complete", g, {StructuralClass::Kind::CompleteK, static_cast<std::size_t>(pr - 1), 0});
    expect_pancyclic(b, "pancyclic", g, ctx);
  } else {
    b.evidence("certificate");
    expect_not_pancyclic(b, "not_pancyclic", g, ctx);
  }
}

// -- T2.8 ---------------------------------------------------------------------------------

void t2_8(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const Int pr = p.at("p"), q = p.at("q");
  const Int n = pr * pr * q * q;
  const RingSpec ring = make_ring(n, RingKind::Zn);
  const Graph g = ctx.gamma(ring);
  require_gamma_integrity(b, ring, g);
  const auto candidates = zn_family_cut_candidates(g, n);
  check_prescribed_set(b, g, candidates);
  b.evidence("certificate");
  expect_not_hamiltonian(b, "not_hamiltonian", g, ctx, {.candidates = candidates});
}

// -- T2.9 / E2.10 ---------------------------------------------------------------------------

FiniteRing field_of_order(Int m) {
  const auto f = factorize(m);
  if (f.size() != 1) throw InadmissibleParams("field order must be a prime power");
  return galois_field(f[0].prime, f[0].exponent);
}

FiniteRing zn_ring(Int n) { return table_ring(make_ring(n, RingKind::Zn)); }

std::pair<FiniteRing, FiniteRing> converse_pair(Int c) {
  switch (c) {
    case 1: return {zn_ring(3), zn_ring(5)};
    case 2: return {zn_ring(4), zn_ring(3)};
    case 3: return {zn_ring(4), zn_ring(4)};
    case 4: return {product_ring(zn_ring(2), zn_ring(2)), galois_field(2, 2)};
    case 5: return {zn_ring(9), galois_field(3, 2)};
  }
  throw InadmissibleParams("converse case must be in 1..5");
}

void t2_9(const Params& p, const CheckContext& ctx, ReportBuilder& b) {
  const bool forward = p.count("m") != 0;
  const auto [r1, r2] = forward ? std::pair{field_of_order(p.at("m")), field_of_order(p.at("m"))}
                                : converse_pair(p.at("converse"));
  const bool hyp = r1.is_integral_domain() && r2.is_integral_domain() && r1.order() == r2.order();
  b.hypothesis("r1_integral_domain", r1.is_integral_domain());
  b.hypothesis("r2_integral_domain", r2.is_integral_domain());
  b.hypothesis("equal_orders", r1.order() == r2.order());
  b.witness("rings", {r1.name(), r2.name()});
  const Graph g = product_ring_graph(r1, r2);
  b.evidence(g.order() <= kFullSpectrumLimit ? "full-spectrum" : "certificate");
  if (hyp)
    expect_bipancyclic(b, "bipancyclic", g, ctx);
  else
    expect_not_bipancyclic(b, "not_bipancyclic", g, ctx);
}

void e2_10(const Params&, const CheckContext& ctx, ReportBuilder& b) {
  const Graph g = product_ring_graph(zn_ring(3), zn_ring(5));
  const std::set<std::string> listed{"(0,1)", "(0,2)", "(0,3)", "(0,4)", "(1,0)", "(2,0)"};
  const std::set<std::string> got(g.labels().begin(), g.labels().end());
  b.require("vertex_set", got == listed, {{"vertices", g.labels()}});
  require_structure(b, "complete_bipartite", g, {StructuralClass::Kind::CompleteBipartite, 2, 4});
  const auto r = has_cycle_of_length(g, 6, ctx.budget);
  b.evidence("exhaustive");
  json detail = {{"length", 6}, {"status", to_string(r.status)}, {"expansions", r.expansions}};
  if (r.status == SearchStatus::Found) detail["cycle"] = cycle_json(g, r.cycle);
  if (r.status == SearchStatus::BudgetExhausted) {
    b.witness("no_6_cycle", detail);
    b.undecided("no_6_cycle", "search for a 6-cycle hit the budget");
  } else {
    b.require("no_6_cycle", r.status == SearchStatus::NotFound, detail);
  }
}

std::vector<Params> pm_grid(Profile profile) {
  return profile_grid(profile, {{{"p", 5}, {"m", 2}}, {{"p", 5}, {"m", 3}}},
                      {{{"p", 5}, {"m", 2}}, {{"p", 5}, {"m", 3}}, {{"p", 7}, {"m", 2}}, {{"p", 7}, {"m", 3}}},
                      {{{"p", 11}, {"m", 2}}, {{"p", 11}, {"m", 3}}, {{"p", 5}, {"m", 4}}});
}

void admit_pm(const Params& p) {
  admit_keys(p, {"p", "m"});
  admit(is_prime(p.at("p")) && p.at("p") >= 5, "p must be a prime >= 5");
  admit(p.at("m") >= 2 && ipow(p.at("p"), static_cast<int>(p.at("m"))) <= 100000, "m must be >= 2 with p^m <= 10^5");
}

}  // namespace

void register_cycle_checks(std::vector<TheoremCheck>& out) {
  out.push_back({"T2.1", "Gamma(Z_{2^m}[i]) is not pancyclic for m > 1", Direction::If, {"m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"m", 2}}}, {{{"m", 2}}, {{"m", 3}}}, {{{"m", 4}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"m"});
                   admit(p.at("m") >= 2 && p.at("m") <= 5, "m must be in 2..5");
                 },
                 t2_1});
  out.push_back({"T2.2", "Gamma(Z_{q^m}[i]) is pancyclic iff m = 2", Direction::Iff, {"q", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"q", 3}, {"m", 2}}, {{"q", 3}, {"m", 3}}},
                                       {{{"q", 3}, {"m", 1}}, {{"q", 3}, {"m", 2}}, {{"q", 3}, {"m", 3}},
                                        {{"q", 7}, {"m", 2}}},
                                       {{{"q", 3}, {"m", 4}}, {{"q", 11}, {"m", 2}}, {{"q", 7}, {"m", 3}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"q", "m"});
                   admit_inert(p.at("q"));
                   admit(p.at("m") >= 1 && ipow(p.at("q"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 1 with q^(2m) <= 10^6");
                 },
                 t2_2});
  out.push_back({"T2.3", "Gamma(Z_{p^m}[i]) is bipancyclic iff m = 1", Direction::Iff, {"p", "m"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 5}, {"m", 1}}},
                                       {{{"p", 5}, {"m", 1}}, {{"p", 13}, {"m", 1}}, {{"p", 5}, {"m", 2}}},
                                       {{{"p", 17}, {"m", 1}}, {{"p", 13}, {"m", 2}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"p", "m"});
                   admit_split(p.at("p"));
                   admit(p.at("m") >= 1 && ipow(p.at("p"), 2 * static_cast<int>(p.at("m"))) <= 1'000'000,
                         "m must be >= 1 with p^(2m) <= 10^6");
                 },
                 t2_3});
  out.push_back({"R2.Q1Q2", "Gamma(Z_{q1 q2}[i]) = K_{q1^2-1, q2^2-1} is neither pancyclic nor bipancyclic",
                 Direction::If, {"q1", "q2"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"q1", 3}, {"q2", 7}}}, {{{"q1", 3}, {"q2", 7}}},
                                       {{{"q1", 3}, {"q2", 11}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"q1", "q2"});
                   admit_inert(p.at("q1"));
                   admit_inert(p.at("q2"));
                   admit(p.at("q1") < p.at("q2") && p.at("q1") * p.at("q2") <= 100, "need q1 < q2 and q1 q2 <= 100");
                 },
                 r2_q1q2});
  out.push_back({"P2.4", "a Hamiltonian graph has c(G - S) <= |S| for every nonempty proper S", Direction::If,
                 {"graphs"}, corpus_grid, admit_corpus, p2_4});
  out.push_back({"L2.5", "Gamma(Z_n) is not Hamiltonian for squarefree n with at least two primes", Direction::If,
                 {"n"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"n", 6}}, {{"n", 30}}}, {{{"n", 6}}, {{"n", 15}}, {{"n", 30}}, {{"n", 105}}},
                                       {{{"n", 210}}, {{"n", 1155}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"n"});
                   const auto f = factorize(p.at("n"));
                   admit(f.size() >= 2 && std::all_of(f.begin(), f.end(), [](auto& x) { return x.exponent == 1; }) &&
                             p.at("n") <= 100000,
                         "n must be squarefree with at least two prime factors and at most 10^5");
                 },
                 l2_5});
  out.push_back({"L2.6", "Gamma(Z_{p^m}) is Hamiltonian iff m = 2", Direction::Iff, {"p", "m"}, pm_grid, admit_pm, l2_6});
  out.push_back({"T2.7", "Gamma(Z_{p^m}) is pancyclic iff m = 2", Direction::Iff, {"p", "m"}, pm_grid, admit_pm, t2_7});
  out.push_back({"T2.8", "Gamma(Z_{p^2 q^2}) is not Hamiltonian", Direction::If, {"p", "q"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"p", 2}, {"q", 3}}}, {{{"p", 2}, {"q", 3}}, {{"p", 2}, {"q", 5}}},
                                       {{{"p", 3}, {"q", 5}}, {{"p", 2}, {"q", 7}}});
                 },
                 [](const Params& p) {
                   admit_keys(p, {"p", "q"});
                   admit(is_prime(p.at("p")) && is_prime(p.at("q")) && p.at("p") < p.at("q"),
                         "p < q must be distinct primes");
                   admit(p.at("p") * p.at("q") <= 300, "p q must be at most 300");
                 },
                 t2_8});
  out.push_back({"T2.9", "Gamma(R1 x R2) is bipancyclic iff R1, R2 are integral domains of equal order",
                 Direction::Iff, {"m", "converse"},
                 [](Profile pr) {
                   return profile_grid(pr, {{{"m", 3}}, {{"converse", 1}}},
                                       {{{"m", 3}}, {{"m", 4}}, {{"m", 5}}, {{"converse", 1}}, {{"converse", 2}},
                                        {{"converse", 3}}, {{"converse", 4}}},
                                       {{{"m", 7}}, {{"m", 8}}, {{"m", 9}}, {{"converse", 5}}});
                 },
                 [](const Params& p) {
                   if (p.count("m")) {
                     admit_keys(p, {"m"});
                     const auto f = factorize(p.at("m"));
                     admit(f.size() == 1 && p.at("m") <= 64, "m must be a prime power at most 64");
                   } else {
                     admit_keys(p, {"converse"});
                     admit(p.at("converse") >= 1 && p.at("converse") <= 5, "converse must be in 1..5");
                   }
                 },
                 t2_9});
  out.push_back({"E2.10", "Gamma(Z_3 x Z_5) = K_{2,4} has no 6-cycle", Direction::If, {},
                 [](Profile) { return std::vector<Params>{Params{}}; },
                 [](const Params& p) { admit(p.empty(), "E2.10 takes no parameters"); }, e2_10});
}

}  // namespace zdg
