#include <algorithm>
#include <array>
#include <chrono>
#include <iterator>
#include <set>
#include <stdexcept>

#include "check_support.hpp"

namespace zdg {

std::string to_string(Profile p) {
  switch (p) {
    case Profile::Smoke: return "smoke";
    case Profile::Standard: return "standard";
    case Profile::Extended: return "extended";
  }
  return "?";
}

Profile profile_from_string(const std::string& s) {
  if (s == "smoke") return Profile::Smoke;
  if (s == "standard") return Profile::Standard;
  if (s == "extended") return Profile::Extended;
  throw std::invalid_argument("unknown profile '" + s + "' (expected smoke, standard or extended)");
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::If: return "if";
    case Direction::OnlyIf: return "only-if";
    case Direction::Iff: return "iff";
  }
  return "?";
}

Graph CheckContext::gamma(const RingSpec& ring) const {
  Graph g = zero_divisor_graph(ring);
  if (mutate_gamma) mutate_gamma(g);
  return g;
}

// ReportBuilder ----------------------------------------------------------------

void ReportBuilder::evidence(const std::string& tier) {
  if (r_.evidence.empty()) {
    r_.evidence = tier;
    return;
  }
  std::size_t start = 0;
  while (start <= r_.evidence.size()) {
    const std::size_t end = std::min(r_.evidence.find('+', start), r_.evidence.size());
    if (r_.evidence.compare(start, end - start, tier) == 0) return;
    start = end + 1;
  }
  r_.evidence += "+" + tier;
}

void ReportBuilder::require(const std::string& name, bool ok, json detail) {
  if (!detail.is_null()) r_.witnesses[name] = std::move(detail);
  if (ok) return;
  if (!refuted_) first_refutation_ = name;
  refuted_ = true;
}

void ReportBuilder::undecided(const std::string& name, const std::string& why) {
  if (!undecided_) first_undecided_ = name + ": " + why;
  undecided_ = true;
}

void ReportBuilder::finish() {
  if (refuted_) {
    r_.conclusion = Conclusion::Refuted;
    r_.reason = "failed: " + first_refutation_;
  } else if (undecided_) {
    r_.conclusion = Conclusion::Undecided;
    r_.reason = first_undecided_;
  } else {
    r_.conclusion = Conclusion::Confirmed;
  }
}

// Expectations ---------------------------------------------------------------------

void require_gamma_integrity(ReportBuilder& b, const RingSpec& ring, const Graph& g) {
  const auto zd = zero_divisor_set(ring);
  bool labels_ok = zd.size() == g.order();
  for (std::size_t i = 0; labels_ok && i < zd.size(); ++i) labels_ok = element_label(zd[i], ring.kind) == g.label(i);
  if (!labels_ok) {
    b.require("graph_integrity", false, {{"vertices", "vertex set differs from the nonzero zero divisors"}});
    return;
  }
  for (Vertex u = 0; u < zd.size(); ++u)
    for (Vertex v = u + 1; v < zd.size(); ++v) {
      const auto prod = mul(zd[u], zd[v]);
      if (prod.is_zero() != g.adjacent(u, v)) {
        b.require("graph_integrity", false,
                  {{"pair", {g.label(u), g.label(v)}},
                   {"product", element_label(prod, ring.kind)},
                   {"graph_adjacent", g.adjacent(u, v)}});
        return;
      }
    }
}

void require_structure(ReportBuilder& b, const std::string& name, const Graph& g, const StructuralClass& expected) {
  const auto got = recognize(g);
  json detail = {{"expected", expected.to_string()}, {"recognized", got.to_string()}};
  if (got != expected && expected.kind == StructuralClass::Kind::CompleteK) {
    // concrete non-adjacent pair as a witness against completeness
    for (Vertex u = 0; u < g.order(); ++u) {
      const Vertex v = g.neighbors(u).complemented().find_next(u + 1);
      if (v < g.order()) {
        detail["non_adjacent_pair"] = {g.label(u), g.label(v)};
        break;
      }
    }
  }
  b.require(name, got == expected, std::move(detail));
}

namespace {

SpectrumOptions spectrum_options(const CheckContext& ctx) {
  SpectrumOptions o;
  o.budget = ctx.budget;
  return o;
}

void expect_verdict(ReportBuilder& b, const std::string& name, const Graph& g, const CycleVerdict& v, bool want_yes) {
  if (v.verdict == Verdict::Undecided) {
    b.witness(name, verdict_json(g, v));
    b.undecided(name, v.reason);
    return;
  }
  b.require(name, (v.verdict == Verdict::Yes) == want_yes, verdict_json(g, v));
}

}  // namespace

void expect_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx) {
  expect_verdict(b, name, g, is_pancyclic(g, spectrum_options(ctx)), true);
}

void expect_not_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx) {
  expect_verdict(b, name, g, is_pancyclic(g, spectrum_options(ctx)), false);
}

void expect_bipancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx) {
  expect_verdict(b, name, g, is_bipancyclic(g, spectrum_options(ctx)), true);
}

void expect_not_bipancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx) {
  expect_verdict(b, name, g, is_bipancyclic(g, spectrum_options(ctx)), false);
}


void expect_hamiltonian(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx) {
  HamiltonOptions o;
  o.budget = ctx.budget;
  const auto h = is_hamiltonian(g, o);
  if (h.verdict == Verdict::Undecided) {
    b.witness(name, hamilton_json(g, h));
    b.undecided(name, h.detail);
    return;
  }
  b.require(name, h.verdict == Verdict::Yes, hamilton_json(g, h));
}

void expect_not_hamiltonian(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx,
                            const CutStrategies& strategies) {
  HamiltonOptions o;
  o.budget = ctx.budget;
  o.cut_strategies = strategies;
  const auto h = is_hamiltonian(g, o);
  if (h.verdict == Verdict::Undecided) {
    b.witness(name, hamilton_json(g, h));
    b.undecided(name, h.detail);
    return;
  }
  b.require(name, h.verdict == Verdict::No, hamilton_json(g, h));
}

void expect_lengths(ReportBuilder& b, const std::string& name, const Graph& g, std::vector<std::size_t> lengths,
                    const CheckContext& ctx) {
  SpectrumOptions o = spectrum_options(ctx);
  o.lengths = lengths;
  const auto s = cycle_spectrum(g, o);
  json detail = {{"lengths", lengths}, {"spectrum", spectrum_json(s)}};
  bool ok = true, open = false;
  for (std::size_t k : lengths) {
    if (s.contains(k)) continue;
    if (k < 3 || k > g.order() || s.refuted().count(k)) {
      ok = false;
      detail["missing"] = k;
      break;
    }
    open = true;
  }
  if (ok && open) {
    b.witness(name, detail);
    b.undecided(name, "sampled length search hit the budget");
    return;
  }
  b.require(name, ok, detail);
}

std::vector<std::size_t> sampled_lengths(std::size_t order) {
  std::set<std::size_t> s;
  for (std::size_t k : {std::size_t{3}, std::size_t{4}, order / 2, order - 1, order})
    if (k >= 3 && k <= order) s.insert(k);
  return {s.begin(), s.end()};
}

void expect_line_graph_pancyclic(ReportBuilder& b, const std::string& name, const Graph& g, const CheckContext& ctx,
                                 bool r_graph) {
  const auto cond = check_line_pancyclic_condition(g);
  b.hypothesis(name + ".edge_degree_condition", cond.holds);
  b.witness(name + ".edge_degree_condition", {{"holds", cond.holds}, {"detail", cond.detail}});
  const std::size_t line_order = g.size();
  if (line_order > kLineGraphLimit) {
    b.evidence("hypothesis");
    b.witness(name, {{"line_graph_order", line_order}});
    if (!cond.holds && !r_graph) b.undecided(name, "line graph too large to search and no sufficient condition holds");
    return;
  }
  const Graph lg = line_graph(g);
  if (line_order <= kFullSpectrumLimit || ctx.profile == Profile::Extended) {
    b.evidence("full-spectrum");
    expect_pancyclic(b, name, lg, ctx);
  } else {
    b.evidence("sampled+condition");
    expect_lengths(b, name, lg, sampled_lengths(lg.order()), ctx);
  }
}

// R-graph and ideal helpers ---------------------------------------------------------

// Nonzero multiples of `gen` in Z_n[i], as labels.
std::set<std::string> principal_ideal(const GaussianResidue& gen) {
  const Int n = gen.modulus();
  std::set<std::string> out;
  for (Int a = 0; a < n; ++a)
    for (Int b = 0; b < n; ++b) {
      const auto x = mul(gen, GaussianResidue(a, b, n));
      if (!x.is_zero()) out.insert(x.to_string());
    }
  return out;
}

// Validates the four named vertices as an R-graph witness of g; missing or repeated
// vertices make it invalid.
void check_named_witness(ReportBuilder& b, const Graph& g, const std::array<std::string, 4>& labels) {
  json detail = {{"r", labels[0]}, {"s", labels[1]}, {"t", labels[2]}, {"u", labels[3]}};
  std::optional<Vertex> idx[4];
  bool present = true;
  for (int i = 0; i < 4; ++i) present = (idx[i] = g.index_of(labels[i])).has_value() && present;
  const std::set<std::string> distinct(labels.begin(), labels.end());
  bool valid = false;
  if (!present) {
    detail["problem"] = "a named element is not a vertex";
  } else if (distinct.size() < 4) {
    detail["problem"] = "named vertices are not distinct";
  } else {
    valid = validate_r_graph(g, {*idx[0], *idx[1], *idx[2], *idx[3]});
    if (!valid) detail["problem"] = "named vertices violate the R-graph conditions";
  }
  detail["valid"] = valid;
  b.hypothesis("named_witness_valid", valid);
  b.witness("named_witness", std::move(detail));
}

bool find_r_graph(ReportBuilder& b, const Graph& g) {
  const auto w = g.order() >= 5 ? is_r_graph(g) : std::nullopt;
  const bool ok = w && validate_r_graph(g, *w);
  b.hypothesis("r_graph", ok);
  if (w) b.witness("r_graph", r_graph_json(g, *w));
  return ok;
}

// Corpus-driven implication checks --------------------------------------------------

std::vector<Params> corpus_grid(Profile profile) {
  switch (profile) {
    case Profile::Smoke: return {{{"graphs", 60}}};
    case Profile::Standard: return {{{"graphs", 220}}};
    case Profile::Extended: return {{{"graphs", 800}}};
  }
  return {};
}

void admit_corpus(const Params& p) {
  auto it = p.find("graphs");
  admit(it != p.end() && it->second >= 1 && it->second <= 100000, "corpus checks take graphs in 1..100000");
}

std::vector<CorpusEntry> implication_corpus(const Params& p) {
  return desk_corpus(static_cast<std::size_t>(p.at("graphs")), 12);
}

// Misc --------------------------------------------------------------------------------

std::string gaussian_label(Int a, Int b, Int n) { return GaussianResidue(a, b, n).to_string(); }

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void admit(bool ok, const std::string& message) {
  if (!ok) throw InadmissibleParams(message);
}

std::vector<Params> profile_grid(Profile profile, std::vector<Params> smoke, std::vector<Params> standard,
                                 std::vector<Params> extra) {
  if (profile == Profile::Smoke) return smoke;
  if (profile == Profile::Extended) standard.insert(standard.end(), extra.begin(), extra.end());
  return standard;
}

void admit_keys(const Params& p, std::initializer_list<const char*> keys) {
  std::string expected;
  for (const char* k : keys) expected += std::string(expected.empty() ? "" : ", ") + k;
  bool ok = p.size() == keys.size();
  for (const char* k : keys) ok = ok && p.count(k);
  admit(ok, "expected parameters {" + expected + "}, got " + to_string(p));
}

// Registry and drivers -----------------------------------------------------------

const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = [] {
    std::vector<TheoremCheck> out;
    register_cycle_checks(out);
    register_line_checks(out);
    register_complement_checks(out);
    return out;
  }();
  return registry;
}

const TheoremCheck& find_check(const std::string& id) {
  for (const auto& c : theorem_registry())
    if (c.id == id) return c;
  throw std::out_of_range("unknown check id '" + id + "'");
}

VerificationReport run_point(const TheoremCheck& check, const Params& params, const CheckContext& ctx) {
  VerificationReport r;
  r.check = check.id;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  ReportBuilder b(r);
  try {
    check.run(params, ctx, b);
    b.finish();
  } catch (const InadmissibleParams&) {
    throw;
  } catch (const std::exception& e) {
    r.conclusion = Conclusion::Undecided;
    r.reason = std::string("internal error: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_check(const std::string& id, const std::optional<Params>& params,
                                          const CheckContext& ctx) {
  const auto& check = find_check(id);
  std::vector<Params> points = params ? std::vector<Params>{*params} : check.grid(ctx.profile);
  for (const auto& p : points) check.admit(p);
  std::vector<VerificationReport> out;
  for (const auto& p : points) out.push_back(run_point(check, p, ctx));
  sort_reports(out);
  return out;
}

std::vector<VerificationReport> run_all(const CheckContext& ctx) {
  std::vector<std::pair<const TheoremCheck*, Params>> points;
  for (const auto& c : theorem_registry())
    for (auto& p : c.grid(ctx.profile)) points.emplace_back(&c, std::move(p));
  std::vector<VerificationReport> out(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) out[i] = run_point(*points[i].first, points[i].second, ctx);
  sort_reports(out);
  return out;
}

}  // namespace zdg
