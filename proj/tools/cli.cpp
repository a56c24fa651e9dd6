#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zdg/certificates.hpp"
#include "zdg/conditions.hpp"
#include "zdg/cycles.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/theorems.hpp"
#include "zdg/witness_json.hpp"

namespace zdg::cli {

namespace {

constexpr Int kMaxCardinality = 1'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  Int n = 0;
  std::string kind = "zni";
  std::vector<std::string> transforms;
  std::string format;
  std::string out;
  std::string in;
  std::string check;
  std::uint64_t budget = kDefaultBudget;
  std::string profile = "standard";
  bool no_timing = false;
  bool list = false;
  std::map<std::string, Int> params;
};

void apply_thread_cap() {
  const char* env = std::getenv("ZDG_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end != env && *end == '\0' && v > 0) omp_set_num_threads(static_cast<int>(v));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write output file '" + o.out + "'");
  f << text;
  if (!f) throw UsageError("cannot write output file '" + o.out + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "key: value" per top-level member.
std::string flat_text(const json& j) {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

RingSpec ring_from(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  const RingKind kind = ring_kind_from_string(o.kind);
  const RingSpec ring = make_ring(o.n, kind);
  if (ring.cardinality() > kMaxCardinality) throw UsageError("ring too large: at most 10^6 elements are supported");
  return ring;
}

Graph graph_from(const Options& o) {
  if (o.transforms.size() > 2) throw UsageError("at most two --transform steps are allowed");
  Graph g = zero_divisor_graph(ring_from(o));
  for (const auto& t : o.transforms) g = t == "line" ? line_graph(g) : complement(g);
  return g;
}

json graph_header(const Graph& g) {
  return {{"n", g.origin().n},
          {"kind", g.origin().kind},
          {"transform", g.origin().transforms},
          {"order", g.order()},
          {"size", g.size()}};
}

// -- ring info ----------------------------------------------------------------------

int ring_info(const Options& o, std::ostream& out) {
  const RingSpec ring = ring_from(o);
  json factors = json::array();
  for (std::size_t i = 0; i < ring.factors.size(); ++i) {
    const auto& c = ring.classes[i];
    json f = {{"prime", ring.factors[i].prime}, {"exponent", ring.factors[i].exponent}, {"class", to_string(c.tag)}};
    if (c.tag == PrimeClass::Tag::Split) f["split_pair"] = {c.a, c.b};
    factors.push_back(std::move(f));
  }
  const auto zd = zero_divisor_set(ring);
  const Int nonzero = ring.cardinality() - 1;
  json j = {{"ring", ring.name()},
            {"n", ring.n},
            {"kind", to_string(ring.kind)},
            {"cardinality", ring.cardinality()},
            {"factors", factors},
            {"zero_divisors", zd.size()},
            {"units", nonzero - static_cast<Int>(zd.size())}};
  emit(o, o.format == "text" ? flat_text(j) : dump(j), out);
  return kOk;
}

// -- graph build / export --------------------------------------------------------------

std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "dot") return to_dot(g);
  if (format == "text") return to_text(g);
  return to_json(g) + "\n";
}

int graph_build(const Options& o, std::ostream& out) {
  emit(o, render_graph(graph_from(o), o.format), out);
  return kOk;
}

int graph_export(const Options& o, std::ostream& out) {
  std::ifstream f(o.in, std::ios::binary);
  if (!f) throw UsageError("cannot read input file '" + o.in + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  emit(o, render_graph(graph_from_json(ss.str()), o.format), out);
  return kOk;
}

// -- analyze ------------------------------------------------------------------------------

json stats_json(const Graph& g) {
  const auto s = stats(g);
  json j = {{"order", s.order},       {"size", s.size},
            {"min_degree", s.min_degree}, {"max_degree", s.max_degree},
            {"pendants", s.pendant_count}, {"components", s.component_count},
            {"diameter", s.diameter ? json(*s.diameter) : json(nullptr)},
            {"structure", recognize(g).to_string()}};
  if (s.bipartition)
    j["bipartite_parts"] = {s.bipartition->smaller.size(), s.bipartition->larger.size()};
  else
    j["bipartite_parts"] = nullptr;
  return j;
}

json conditions_json(const Graph& g) {
  const auto lc = check_line_pancyclic_condition(g);
  json bridges = json::array();
  for (const auto& [u, v] : lc.bridges) bridges.push_back({g.label(u), g.label(v)});
  json j;
  j["line_pancyclic_condition"] = {{"holds", lc.holds},
                                   {"connected", lc.connected},
                                   {"order_at_least_4", lc.order_ok},
                                   {"degree_sum", lc.degree_sum_ok},
                                   {"excluded_cycle", lc.excluded_cycle},
                                   {"bridges", bridges},
                                   {"min_degree_sum", lc.min_degree_sum},
                                   {"detail", lc.detail}};
  j["diameter_condition"] = check_diameter_condition(g);
  try {
    const auto fan = check_fan_condition(g);
    json f = {{"holds", fan.holds}};
    if (fan.violating_pair) f["violating_pair"] = {g.label(fan.violating_pair->first), g.label(fan.violating_pair->second)};
    j["fan_condition"] = f;
  } catch (const NotTwoConnected& e) {
    json f = {{"holds", false}, {"error", e.what()}};
    if (e.cut_vertex) f["cut_vertex"] = g.label(*e.cut_vertex);
    j["fan_condition"] = f;
  }
  j["bondy_edge_count"] = check_bondy_edge_count(g);
  return j;
}

int analyze(const Options& o, std::ostream& out) {
  const Graph g = graph_from(o);
  SpectrumOptions so;
  so.budget = o.budget;
  json result;
  int code = kOk;
  const std::string& c = o.check;
  if (c == "spectrum") {
    const auto s = cycle_spectrum(g, so);
    result = spectrum_json(s);
    json missing = json::array();
    for (std::size_t k = 3; k <= g.order(); ++k)
      if (!s.contains(k) && !s.undecided().count(k)) missing.push_back(k);
    result["missing"] = missing;
    json witnesses = json::object();
    for (const auto& [k, cyc] : s.witnesses()) witnesses[std::to_string(k)] = cycle_json(g, cyc);
    result["witnesses"] = witnesses;
    if (!s.exhaustive()) code = kUndecided;
  } else if (c == "hamiltonian") {
    HamiltonOptions ho;
    ho.budget = o.budget;
    const auto h = is_hamiltonian(g, ho);
    result = hamilton_json(g, h);
    if (h.verdict == Verdict::Undecided) code = kUndecided;
  } else if (c == "pancyclic" || c == "bipancyclic") {
    const auto v = c == "pancyclic" ? is_pancyclic(g, so) : is_bipancyclic(g, so);
    result = verdict_json(g, v);
    if (v.verdict == Verdict::Undecided) code = kUndecided;
  } else if (c == "girth") {
    const auto gi = girth(g);
    result = {{"girth", gi ? json(*gi) : json(nullptr)}};
  } else if (c == "stats") {
    result = stats_json(g);
  } else if (c == "rgraph") {
    if (g.order() < 5) {
      result = {{"r_graph", nullptr}, {"reason", "order below 5"}};
    } else {
      const auto w = is_r_graph(g);
      result = {{"r_graph", w ? r_graph_json(g, *w) : json(nullptr)}};
    }
  } else if (c == "cut") {
    const auto cert = find_cut_certificate(g);
    result = {{"certificate", cert ? certificate_json(g, *cert) : json(nullptr)}};
  } else {
    result = conditions_json(g);
  }
  json j = {{"graph", graph_header(g)}, {"check", c}, {"result", result}};
  emit(o, o.format == "text" ? flat_text(graph_header(g)) + "check: " + c + "\n" + flat_text(result) : dump(j), out);
  return code;
}

// -- verify / verify-all ----------------------------------------------------------------------

int suite_exit(const std::vector<VerificationReport>& reports) {
  const auto s = summarize(reports);
  if (s.refuted) return kRefuted;
  if (s.undecided) return kUndecided;
  return kOk;
}

CheckContext context_from(const Options& o) {
  CheckContext ctx;
  ctx.budget = o.budget;
  ctx.profile = profile_from_string(o.profile);
  return ctx;
}

int verify(const Options& o, std::ostream& out) {
  if (o.list) {
    json j = json::array();
    std::ostringstream text;
    for (const auto& c : theorem_registry()) {
      j.push_back({{"check", c.id}, {"direction", to_string(c.direction)}, {"summary", c.summary}, {"symbols", c.symbols}});
      text << c.id << std::string(c.id.size() < 9 ? 9 - c.id.size() : 1, ' ') << c.summary << "\n";
    }
    emit(o, o.format == "text" ? text.str() : dump(j), out);
    return kOk;
  }
  if (o.check.empty()) throw UsageError("verify needs --check ID (see verify --list)");
  const CheckContext ctx = context_from(o);
  std::optional<Params> params;
  if (!o.params.empty()) params = o.params;
  std::vector<VerificationReport> reports;
  try {
    reports = run_check(o.check, params, ctx);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const bool timing = !o.no_timing;
  std::string text;
  if (o.format == "text")
    text = render_table(reports, timing);
  else
    text = dump(reports.size() == 1 && params ? to_json(reports.front(), timing) : suite_json(reports, timing));
  emit(o, text, out);
  return suite_exit(reports);
}

int verify_all(const Options& o, std::ostream& out) {
  const auto reports = run_all(context_from(o));
  const bool timing = !o.no_timing;
  emit(o, o.format == "text" ? render_table(reports, timing) : dump(suite_json(reports, timing)), out);
  return suite_exit(reports);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  Options o;
  CLI::App app{"Zero-divisor graphs over Z_n and Z_n[i]: construction, cycle structure, theorem checks", "zdg"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const std::vector<std::string> kinds{"zn", "zni"};
  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Modulus n")->required()->check(CLI::PositiveNumber);
    sub->add_option("--kind", o.kind, "Ring kind: zn (Z_n) or zni (Z_n[i])")->check(CLI::IsMember(kinds));
  };
  auto graph_opts = [&](CLI::App* sub) {
    ring_opts(sub);
    sub->add_option("--transform", o.transforms, "Transform applied left to right (line, complement); at most 2")
        ->check(CLI::IsMember({"line", "complement"}))
        ->take_all()
        ->allow_extra_args(false);
  };
  auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed, std::string def) {
    o.format = def;
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->default_str(def);
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write output to PATH instead of stdout"); };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Node expansions per cycle-length search")->check(CLI::PositiveNumber);
  };

  auto* ring = app.add_subcommand("ring", "Ring arithmetic");
  ring->require_subcommand(1);
  auto* ring_info_cmd = ring->add_subcommand("info", "Factorization, prime classes and zero-divisor counts");
  ring_opts(ring_info_cmd);
  format_opt(ring_info_cmd, {"json", "text"}, "json");
  out_opt(ring_info_cmd);

  auto* graph = app.add_subcommand("graph", "Build and convert graphs");
  graph->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Build Gamma(R), optionally followed by transforms");
  graph_opts(build);
  format_opt(build, {"json", "dot", "text"}, "json");
  out_opt(build);
  auto* exp = graph->add_subcommand("export", "Read a JSON graph and write it in another format");
  exp->add_option("--in", o.in, "JSON graph file")->required();
  format_opt(exp, {"json", "dot", "text"}, "json");
  out_opt(exp);

  auto* an = app.add_subcommand("analyze", "Cycle structure and conditions of one graph");
  graph_opts(an);
  an->add_option("--check", o.check, "Analysis to run")
      ->required()
      ->check(CLI::IsMember(
          {"spectrum", "hamiltonian", "pancyclic", "bipancyclic", "girth", "stats", "rgraph", "cut", "conditions"}));
  budget_opt(an);
  format_opt(an, {"json", "text"}, "json");
  out_opt(an);

  auto* ver = app.add_subcommand("verify", "Run one theorem check over its grid or at one parameter point");
  ver->add_option("--check", o.check, "Check id, e.g. T2.2");
  ver->add_flag("--list", o.list, "List check ids");
  for (const char* key : {"p", "q", "m", "n", "q1", "q2", "graphs", "converse", "case"}) {
    ver->add_option_function<Int>(
        std::string("--") + key, [&o, key](const Int& v) { o.params[key] = v; }, std::string("Parameter ") + key);
  }
  budget_opt(ver);
  ver->add_option("--profile", o.profile, "Grid profile")->check(CLI::IsMember({"smoke", "standard", "extended"}));
  ver->add_flag("--no-timing", o.no_timing, "Omit wall times for byte-identical output");
  format_opt(ver, {"json", "text"}, "json");
  out_opt(ver);

  auto* all = app.add_subcommand("verify-all", "Run every theorem check over a profile grid");
  all->add_option("--profile", o.profile, "Grid profile")->check(CLI::IsMember({"smoke", "standard", "extended"}));
  budget_opt(all);
  all->add_flag("--no-timing", o.no_timing, "Omit wall times for byte-identical output");
  format_opt(all, {"json", "text"}, "json");
  out_opt(all);

  // format_opt reset o.format per subcommand; restore once the chosen one parses.
  o.format.clear();
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (o.format.empty()) o.format = "json";

  try {
    if (ring_info_cmd->parsed()) return ring_info(o, out);
    if (build->parsed()) return graph_build(o, out);
    if (exp->parsed()) return graph_export(o, out);
    if (an->parsed()) return analyze(o, out);
    if (ver->parsed()) return verify(o, out);
    if (all->parsed()) return verify_all(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InadmissibleParams& e) {
    err << "error: inadmissible parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace zdg::cli
