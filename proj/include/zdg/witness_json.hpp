#pragma once

// JSON forms of witnesses and verdicts; vertices are written by label.

#include <vector>

#include <json.hpp>

#include "zdg/conditions.hpp"
#include "zdg/cycles.hpp"

namespace zdg {

using json = nlohmann::ordered_json;

json labels_json(const Graph& g, const std::vector<Vertex>& vs);
json cycle_json(const Graph& g, const Cycle& c);
json certificate_json(const Graph& g, const CutCertificate& c);
/// Lengths are compressed into runs such as "3..48".
json spectrum_json(const CycleSpectrum& s);
json r_graph_json(const Graph& g, const RGraphWitness& w);
json verdict_json(const Graph& g, const CycleVerdict& v);
json hamilton_json(const Graph& g, const HamiltonResult& h);

}  // namespace zdg
