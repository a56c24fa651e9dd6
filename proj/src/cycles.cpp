#include "zdg/cycles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace zdg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(HamiltonResult::Reason r) {
  using R = HamiltonResult::Reason;
  switch (r) {
    case R::Witness: return "witness";
    case R::OrderTooSmall: return "order_too_small";
    case R::Disconnected: return "disconnected";
    case R::CutSet: return "cut_certificate";
    case R::UnbalancedBipartite: return "unbalanced_bipartite";
    case R::Exhaustive: return "exhaustive_search";
    case R::Budget: return "budget_exhausted";
  }
  return "?";
}

void CycleSpectrum::insert(const Graph& g, Cycle cycle) {
  if (!is_valid_cycle(g, cycle)) throw std::logic_error("CycleSpectrum: invalid witness " + vertex_list(g, cycle));
  const std::size_t k = cycle.size();
  present_.insert(k);
  undecided_.erase(k);
  refuted_.erase(k);
  witnesses_.try_emplace(k, std::move(cycle));
}

void CycleSpectrum::mark_refuted(std::size_t k) {
  if (!present_.count(k)) refuted_.insert(k);
}

void CycleSpectrum::mark_undecided(std::size_t k) {
  if (!present_.count(k)) undecided_.insert(k);
}

namespace {

std::set<std::size_t> wanted_lengths(const Graph& g, const SpectrumOptions& opts) {
  std::set<std::size_t> wanted;
  if (opts.lengths) {
    for (std::size_t k : *opts.lengths)
      if (k >= 3 && k <= g.order()) wanted.insert(k);
  } else {
    for (std::size_t k = 3; k <= g.order(); ++k) wanted.insert(k);
  }
  return wanted;
}

std::set<std::size_t> open_lengths(const CycleSpectrum& s, const std::set<std::size_t>& wanted) {
  std::set<std::size_t> open;
  for (std::size_t k : wanted)
    if (!s.contains(k) && !s.refuted().count(k)) open.insert(k);
  return open;
}

// Closed-form spectra of recognized families. Returns false when g is not one of them.
bool closed_form_spectrum(const Graph& g, const std::set<std::size_t>& wanted, CycleSpectrum& s) {
  using K = StructuralClass::Kind;
  const auto cls = recognize(g);
  if (cls.kind == K::CompleteK) {
    for (std::size_t k : wanted) {
      Cycle c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = i;
      s.insert(g, std::move(c));
    }
    return true;
  }
  if (cls.kind == K::CompleteBipartite || cls.kind == K::Star) {
    const auto parts = bipartition(g);
    const std::size_t a = parts->smaller.size();
    for (std::size_t k : wanted) {
      if (k % 2 == 1 || k > 2 * a) {
        s.mark_refuted(k);
        continue;
      }
      Cycle c;
      for (std::size_t i = 0; i < k / 2; ++i) {
        c.push_back(parts->smaller[i]);
        c.push_back(parts->larger[i]);
      }
      s.insert(g, std::move(c));
    }
    return true;
  }
  return false;
}

// Grows the spectrum from known witnesses by chords and single insertions.
void derive_from_witnesses(const Graph& g, const std::set<std::size_t>& wanted, CycleSpectrum& s) {
  std::deque<Cycle> queue;
  for (const auto& [k, c] : s.witnesses()) queue.push_back(c);
  std::size_t processed = 0;
  const std::size_t cap = 4 * g.order() + 16;
  while (!queue.empty() && processed++ < cap) {
    const Cycle c = std::move(queue.front());
    queue.pop_front();
    const auto open = open_lengths(s, wanted);
    if (open.empty()) return;
    for (auto& [k, d] : derive_cycles(g, c, open)) {
      s.insert(g, d);
      queue.push_back(std::move(d));
    }
  }
}

CycleSpectrum spectrum_impl(const Graph& g, const SpectrumOptions& opts, bool parallel) {
  CycleSpectrum s(g.order());
  const auto wanted = wanted_lengths(g, opts);
  if (wanted.empty()) return s;
  if (opts.use_shortcuts && closed_form_spectrum(g, wanted, s)) return s;

  if (bipartition(g)) {
    for (std::size_t k : wanted)
      if (k % 2 == 1) s.mark_refuted(k);
  }
  if (opts.use_heuristics) {
    if (auto seed = find_long_cycle(g)) {
      s.insert(g, *seed);
      derive_from_witnesses(g, wanted, s);
    }
  }

  const auto todo_set = open_lengths(s, wanted);
  const std::vector<std::size_t> todo(todo_set.begin(), todo_set.end());
  std::vector<CycleSearchResult> results(todo.size());
  const auto count = static_cast<std::int64_t>(todo.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) results[i] = has_cycle_of_length(g, todo[i], opts.budget);
  } else {
    for (std::int64_t i = 0; i < count; ++i) results[i] = has_cycle_of_length(g, todo[i], opts.budget);
  }
  for (std::size_t i = 0; i < todo.size(); ++i) {
    switch (results[i].status) {
      case SearchStatus::Found: s.insert(g, std::move(results[i].cycle)); break;
      case SearchStatus::NotFound: s.mark_refuted(todo[i]); break;
      case SearchStatus::BudgetExhausted: s.mark_undecided(todo[i]); break;
    }
  }
  if (!s.undecided().empty() && opts.use_heuristics) derive_from_witnesses(g, wanted, s);
  return s;
}

std::size_t max_component_size(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : component_vertex_sets(g)) best = std::max(best, c.size());
  return best;
}

// Cheap refutation of a Hamiltonian cycle: cut vertices and low-degree neighborhoods.
std::optional<CutCertificate> quick_certificate(const Graph& g) {
  CutStrategies quick;
  quick.max_subset_size = 0;
  if (auto cv = find_cut_vertex(g)) quick.candidates.push_back({*cv});
  auto deg = g.degrees();
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
  for (std::size_t i = 0; i < order.size() && i < 32; ++i) quick.candidates.push_back(g.neighbors(order[i]).to_vector());
  quick.neighborhoods = false;
  return find_cut_certificate(g, quick);
}

CycleVerdict required_lengths_verdict(const Graph& g, std::vector<std::size_t> required, const SpectrumOptions& opts) {
  CycleVerdict v;
  SpectrumOptions o = opts;
  o.lengths = required;
  v.spectrum = cycle_spectrum(g, o);
  for (std::size_t k : required) {
    if (v.spectrum.contains(k)) continue;
    (v.spectrum.refuted().count(k) ? v.missing : v.undecided).push_back(k);
  }
  if (!v.missing.empty()) {
    v.verdict = Verdict::No;
    v.reason = "no cycle of length " + std::to_string(v.missing.front()) + " (complete search)";
  } else if (!v.undecided.empty()) {
    v.verdict = Verdict::Undecided;
    v.reason = "search budget exhausted";
  } else {
    v.verdict = Verdict::Yes;
  }
  return v;
}

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opts) { return spectrum_impl(g, opts, true); }

namespace serial {
CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opts) { return spectrum_impl(g, opts, false); }
}  // namespace serial

CycleVerdict is_pancyclic(const Graph& g, const SpectrumOptions& opts) {
  const std::size_t n = g.order();
  CycleVerdict v;
  v.spectrum = CycleSpectrum(n);
  if (n < 3) {
    v.verdict = Verdict::No;
    v.reason = "order " + std::to_string(n) + " < 3";
    return v;
  }
  if (bipartition(g)) {
    v.verdict = Verdict::No;
    v.missing = {3};
    v.spectrum.mark_refuted(3);
    v.reason = "bipartite: no odd cycles";
    return v;
  }
  if (max_component_size(g) < n) {
    v.verdict = Verdict::No;
    v.missing = {n};
    v.spectrum.mark_refuted(n);
    v.reason = "disconnected: no cycle of length " + std::to_string(n);
    return v;
  }
  if (auto cert = quick_certificate(g)) {
    v.verdict = Verdict::No;
    v.missing = {n};
    v.spectrum.mark_refuted(n);
    v.certificate = std::move(cert);
    v.reason = "cut certificate: no cycle of length " + std::to_string(n);
    return v;
  }
  std::vector<std::size_t> required;
  for (std::size_t k = 3; k <= n; ++k) required.push_back(k);
  return required_lengths_verdict(g, std::move(required), opts);
}

CycleVerdict is_bipancyclic(const Graph& g, const SpectrumOptions& opts) {
  const std::size_t n = g.order();
  CycleVerdict v;
  v.spectrum = CycleSpectrum(n);
  if (n < 4) {
    v.verdict = Verdict::No;
    v.reason = "order " + std::to_string(n) + " < 4";
    return v;
  }
  const std::size_t top = n - n % 2;
  if (max_component_size(g) < top) {
    v.verdict = Verdict::No;
    v.missing = {top};
    v.spectrum.mark_refuted(top);
    v.reason = "no component with " + std::to_string(top) + " vertices";
    return v;
  }
  if (auto parts = bipartition(g); parts && 2 * parts->smaller.size() < top) {
    v.verdict = Verdict::No;
    v.missing = {top};
    v.spectrum.mark_refuted(top);
    v.reason = "bipartite parts " + std::to_string(parts->smaller.size()) + "+" +
               std::to_string(parts->larger.size()) + " admit no cycle longer than " +
               std::to_string(2 * parts->smaller.size());
    return v;
  }
  if (top == n) {
    if (auto cert = quick_certificate(g)) {
      v.verdict = Verdict::No;
      v.missing = {n};
      v.spectrum.mark_refuted(n);
      v.certificate = std::move(cert);
      v.reason = "cut certificate: no cycle of length " + std::to_string(n);
      return v;
    }
  }
  std::vector<std::size_t> required;
  for (std::size_t k = 4; k <= n; k += 2) required.push_back(k);
  return required_lengths_verdict(g, std::move(required), opts);
}

HamiltonResult is_hamiltonian(const Graph& g, const HamiltonOptions& opts) {
  using R = HamiltonResult::Reason;
  HamiltonResult r;
  const std::size_t n = g.order();
  if (n < 3) {
    r.verdict = Verdict::No;
    r.reason = R::OrderTooSmall;
    r.detail = "order " + std::to_string(n) + " < 3";
    return r;
  }
  if (!is_connected(g)) {
    r.verdict = Verdict::No;
    r.reason = R::Disconnected;
    r.detail = std::to_string(component_count(g)) + " components";
    return r;
  }
  if (auto parts = bipartition(g); parts && parts->smaller.size() != parts->larger.size()) {
    r.verdict = Verdict::No;
    r.reason = R::UnbalancedBipartite;
    r.detail = "bipartite parts " + std::to_string(parts->smaller.size()) + "+" + std::to_string(parts->larger.size());
    return r;
  }
  if (opts.use_heuristics) {
    if (auto c = find_long_cycle(g); c && c->size() == n) {
      r.verdict = Verdict::Yes;
      r.reason = R::Witness;
      r.cycle = std::move(*c);
      return r;
    }
  }
  if (auto cert = quick_certificate(g)) {
    r.verdict = Verdict::No;
    r.reason = R::CutSet;
    r.certificate = std::move(cert);
    return r;
  }
  if (auto cert = find_cut_certificate(g, opts.cut_strategies)) {
    r.verdict = Verdict::No;
    r.reason = R::CutSet;
    r.certificate = std::move(cert);
    return r;
  }
  auto search = has_cycle_of_length(g, n, opts.budget);
  switch (search.status) {
    case SearchStatus::Found:
      r.verdict = Verdict::Yes;
      r.reason = R::Witness;
      r.cycle = std::move(search.cycle);
      break;
    case SearchStatus::NotFound:
      r.verdict = Verdict::No;
      r.reason = R::Exhaustive;
      break;
    case SearchStatus::BudgetExhausted:
      r.verdict = Verdict::Undecided;
      r.reason = R::Budget;
      r.detail = "budget " + std::to_string(opts.budget) + " exhausted";
      break;
  }
  return r;
}

}  // namespace zdg
