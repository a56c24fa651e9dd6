#include "zdg/witness_json.hpp"

#include <iterator>

namespace zdg {

json labels_json(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

json cycle_json(const Graph& g, const Cycle& c) { return labels_json(g, c); }

json certificate_json(const Graph& g, const CutCertificate& c) {
  return {{"cut_set", labels_json(g, c.cut_set)}, {"components_after", c.components_after}};
}

namespace {

// Compresses sorted lengths into "a..b" runs.
json length_runs(const std::set<std::size_t>& lengths) {
  json out = json::array();
  for (auto it = lengths.begin(); it != lengths.end();) {
    std::size_t lo = *it, hi = lo;
    auto next = std::next(it);
    while (next != lengths.end() && *next == hi + 1) hi = *next++;
    out.push_back(lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi));
    it = next;
  }
  return out;
}

}  // namespace

json spectrum_json(const CycleSpectrum& s) {
  return {{"order", s.order()},
          {"present", length_runs(s.present())},
          {"refuted", length_runs(s.refuted())},
          {"undecided", length_runs(s.undecided())},
          {"exhaustive", s.exhaustive()}};
}

json r_graph_json(const Graph& g, const RGraphWitness& w) {
  return {{"r", g.label(w.r)}, {"s", g.label(w.s)}, {"t", g.label(w.t)}, {"u", g.label(w.u)}};
}

json verdict_json(const Graph& g, const CycleVerdict& v) {
  json j = {{"verdict", to_string(v.verdict)}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.missing.empty()) j["missing"] = v.missing;
  if (!v.undecided.empty()) j["undecided"] = v.undecided;
  if (v.certificate) j["certificate"] = certificate_json(g, *v.certificate);
  if (!v.spectrum.present().empty() || !v.spectrum.refuted().empty()) j["spectrum"] = spectrum_json(v.spectrum);
  if (v.verdict == Verdict::Yes && !v.spectrum.witnesses().empty() && g.order() <= 64)
    j["longest_witness"] = cycle_json(g, v.spectrum.witnesses().rbegin()->second);
  return j;
}

json hamilton_json(const Graph& g, const HamiltonResult& h) {
  json j = {{"verdict", to_string(h.verdict)}, {"reason", to_string(h.reason)}};
  if (!h.detail.empty()) j["detail"] = h.detail;
  if (!h.cycle.empty()) j["cycle"] = cycle_json(g, h.cycle);
  if (h.certificate) j["certificate"] = certificate_json(g, *h.certificate);
  return j;
}

}  // namespace zdg
