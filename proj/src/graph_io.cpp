#include "zdg/graph_io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace zdg {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph zdg {\n";
  for (const auto& label : g.labels()) os << "  " << dot_quote(label) << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.origin().n;
  j["kind"] = g.origin().kind;
  j["transform"] = g.origin().transforms;
  j["vertices"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  try {
    GraphOrigin origin;
    origin.n = j.at("n").get<Int>();
    origin.kind = j.at("kind").get<std::string>();
    origin.transforms = j.at("transform").get<std::vector<std::string>>();
    for (const auto& t : origin.transforms)
      if (t != "line" && t != "complement") throw std::invalid_argument("graph JSON: unknown transform '" + t + "'");
    Graph g(j.at("vertices").get<std::vector<std::string>>(), std::move(origin));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: bad edge " + e.dump());
      const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
      if (u >= g.order() || v >= g.order() || u == v)
        throw std::invalid_argument("graph JSON: bad edge " + e.dump());
      g.add_edge(u, v);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

std::string to_text(const Graph& g) {
  const auto s = stats(g);
  std::ostringstream os;
  os << "order " << s.order << "\n"
     << "size " << s.size << "\n"
     << "degree " << s.min_degree << ".." << s.max_degree << "\n"
     << "pendants " << s.pendant_count << "\n"
     << "components " << s.component_count << "\n"
     << "diameter " << (s.diameter ? std::to_string(*s.diameter) : "unreachable") << "\n"
     << "bipartite " << (s.bipartition ? "yes" : "no");
  if (s.bipartition) os << " (" << s.bipartition->smaller.size() << "+" << s.bipartition->larger.size() << ")";
  os << "\nstructure " << recognize(g).to_string() << "\n";
  return os.str();
}

}  // namespace zdg
