#include <doctest.h>

#include <json.hpp>

#include "zdg/corpus.hpp"
#include "zdg/graph_io.hpp"

using namespace zdg;

TEST_CASE("json round trip is exact") {
  std::vector<Graph> graphs{zero_divisor_graph(make_ring(12, RingKind::ZnGaussian)),
                            line_graph(zero_divisor_graph(make_ring(8, RingKind::ZnGaussian))),
                            line_graph(complement(zero_divisor_graph(make_ring(4, RingKind::ZnGaussian)))),
                            zero_divisor_graph(make_ring(30, RingKind::Zn)), Graph::with_order(0)};
  for (const auto& e : desk_corpus(60, 12)) graphs.push_back(e.graph);
  for (const Graph& g : graphs) {
    const std::string text = to_json(g);
    const Graph back = graph_from_json(text);
    CHECK(back == g);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("json layout") {
  const Graph g = complement(zero_divisor_graph(make_ring(6, RingKind::Zn)));
  const auto j = nlohmann::json::parse(to_json(g));
  CHECK(j["n"] == 6);
  CHECK(j["kind"] == "zn");
  CHECK(j["transform"] == nlohmann::json::array({"complement"}));
  CHECK(j["vertices"] == nlohmann::json::array({"2", "3", "4"}));
  CHECK(j["edges"] == nlohmann::json::array({nlohmann::json::array({0, 2})}));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":["a"],"edges":[[0,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":["a","a"],"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":["a","b"],"edges":[[0,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), std::invalid_argument);
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(complement(zero_divisor_graph(make_ring(5, RingKind::ZnGaussian))));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("\"1+2i\";\n") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("--"); at != std::string::npos; at = dot.find("--", at + 2)) ++edges;
  CHECK(edges == 12);
}

TEST_CASE("text summary mentions the structure") {
  const std::string t = to_text(zero_divisor_graph(make_ring(9, RingKind::ZnGaussian)));
  CHECK(t.find("K_8") != std::string::npos);
}
