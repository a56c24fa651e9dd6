#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "zdg/finite_ring.hpp"
#include "zdg/graph.hpp"

using namespace zdg;

namespace {

Graph gamma_i(Int n) { return zero_divisor_graph(make_ring(n, RingKind::ZnGaussian)); }
Graph gamma_z(Int n) { return zero_divisor_graph(make_ring(n, RingKind::Zn)); }

std::set<std::string> label_set(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(g.label(v));
  return out;
}

// Nonzero multiples x * g of a generator, as labels.
std::set<std::string> ideal_labels(const GaussianResidue& gen) {
  std::set<std::string> out;
  for (const auto& x : ring_elements(make_ring(gen.modulus(), RingKind::ZnGaussian))) {
    const auto y = x * gen;
    if (!y.is_zero()) out.insert(y.to_string());
  }
  return out;
}

}  // namespace

TEST_CASE("gamma agrees with direct products on every pair for n <= 30") {
  for (Int n = 2; n <= 30; ++n) {
    for (RingKind kind : {RingKind::Zn, RingKind::ZnGaussian}) {
      const RingSpec ring = make_ring(n, kind);
      const Graph g = zero_divisor_graph(ring);
      const auto zd = zero_divisor_set(ring);
      REQUIRE(g.order() == zd.size());
      for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        CHECK(g.label(u) == element_label(zd[u], kind));
        for (Vertex v = u + 1; v < g.order(); ++v) {
          CHECK(g.adjacent(u, v) == g.adjacent(v, u));
          CHECK(g.adjacent(u, v) == (zd[u] * zd[v]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("small gamma examples") {
  const Graph z6 = gamma_z(6);
  CHECK(z6.labels() == std::vector<std::string>{"2", "3", "4"});
  CHECK(z6.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph z15 = gamma_z(15);
  CHECK(recognize(z15) == StructuralClass{StructuralClass::Kind::CompleteBipartite, 2, 4});
  const auto parts = bipartition(z15);
  REQUIRE(parts);
  CHECK(label_set(z15, parts->smaller) == std::set<std::string>{"5", "10"});
  CHECK(label_set(z15, parts->larger) == std::set<std::string>{"3", "6", "9", "12"});
  CHECK(diameter(z15) == 2);

  CHECK(recognize(gamma_i(9)) == StructuralClass{StructuralClass::Kind::CompleteK, 8, 0});
  CHECK(recognize(gamma_i(21)) == StructuralClass{StructuralClass::Kind::CompleteBipartite, 8, 48});
  CHECK(recognize(gamma_z(14)) == StructuralClass{StructuralClass::Kind::Star, 6, 0});
  CHECK(stats(gamma_i(4)).pendant_count == 4);
  CHECK(diameter(complete_graph(8)) == 1);
}

TEST_CASE("gamma of Z_p[i] splits along the two conjugate ideals") {
  for (Int p : {5, 13}) {
    const Graph g = gamma_i(p);
    CHECK(recognize(g) == StructuralClass{StructuralClass::Kind::CompleteBipartite, std::size_t(p - 1), std::size_t(p - 1)});
    const auto c = classify_prime(p);
    const auto parts = bipartition(g);
    REQUIRE(parts);
    const auto a = label_set(g, parts->smaller), b = label_set(g, parts->larger);
    const auto plus = ideal_labels(GaussianResidue(c.a, c.b, p));
    const auto minus = ideal_labels(GaussianResidue(c.a, -c.b, p));
    CHECK(((a == plus && b == minus) || (a == minus && b == plus)));
  }
}

TEST_CASE("product ring graphs") {
  const FiniteRing z2 = table_ring(make_ring(2, RingKind::Zn));
  const FiniteRing z3 = table_ring(make_ring(3, RingKind::Zn));
  const FiniteRing z4 = table_ring(make_ring(4, RingKind::Zn));
  const FiniteRing z5 = table_ring(make_ring(5, RingKind::Zn));

  const Graph k24 = product_ring_graph(z3, z5);
  CHECK(label_set(k24, {0, 1, 2, 3, 4, 5}) ==
        std::set<std::string>{"(0,1)", "(0,2)", "(0,3)", "(0,4)", "(1,0)", "(2,0)"});
  CHECK(recognize(k24) == StructuralClass{StructuralClass::Kind::CompleteBipartite, 2, 4});

  const Graph edge = product_ring_graph(z2, z2);
  CHECK(edge.labels() == std::vector<std::string>{"(0,1)", "(1,0)"});
  CHECK(edge.size() == 1);

  // Z_4 x Z_3 has 12 - |units| - 1 = 12 - 4 - 1 nonzero zero divisors.
  CHECK(product_ring_graph(z4, z3).order() == 7);
}

TEST_CASE("product of the CRT factors reproduces gamma of Z_21[i]") {
  const FiniteRing z3i = table_ring(make_ring(3, RingKind::ZnGaussian));
  const FiniteRing z7i = table_ring(make_ring(7, RingKind::ZnGaussian));
  const Graph prod = product_ring_graph(z3i, z7i);
  const Graph direct = gamma_i(21);
  CHECK(recognize(prod) == recognize(direct));
  CHECK(prod.size() == direct.size());
}

TEST_CASE("complement") {
  const Graph c = complement(gamma_i(5));
  CHECK(component_count(c) == 2);
  for (const Graph& h : connected_components(c)) CHECK(recognize(h) == StructuralClass{StructuralClass::Kind::CompleteK, 4, 0});

  const Graph iso = complement(gamma_i(9));
  CHECK(iso.size() == 0);
  CHECK(component_count(iso) == 8);

  for (Int n : {4, 6, 10, 12}) {
    const Graph g = gamma_i(n);
    const Graph back = complement(complement(g));
    CHECK(back.labels() == g.labels());
    CHECK(back.edges() == g.edges());
  }

  const auto parts = connected_components(complement(gamma_i(4)));
  REQUIRE(parts.size() == 2);
  bool isolated = false;
  for (const Graph& h : parts) isolated = isolated || (h.order() == 1 && h.label(0) == "2+2i");
  CHECK(isolated);
}

TEST_CASE("line graph") {
  CHECK(recognize(line_graph(star_graph(6))) == StructuralClass{StructuralClass::Kind::CompleteK, 6, 0});
  CHECK(recognize(line_graph(complete_graph(3))) == StructuralClass{StructuralClass::Kind::CompleteK, 3, 0});
  CHECK(line_graph(gamma_i(4)).order() == 7);

  const Graph z6 = line_graph(gamma_z(6));
  CHECK(z6.labels() == std::vector<std::string>{"{2,3}", "{3,4}"});

  for (Int n : {4, 6, 8, 10, 15}) {
    const Graph g = gamma_i(n);
    const Graph l = line_graph(g);
    CHECK(l.order() == g.size());
    std::size_t expect = 0;
    for (auto d : g.degrees()) expect += d * (d - 1) / 2;
    CHECK(l.size() == expect);
    // adjacency iff the endpoint pairs share a vertex
    const auto es = g.edges();
    for (Vertex a = 0; a < es.size(); ++a)
      for (Vertex b = a + 1; b < es.size(); ++b) {
        const bool share = es[a].first == es[b].first || es[a].first == es[b].second ||
                           es[a].second == es[b].first || es[a].second == es[b].second;
        CHECK(l.adjacent(a, b) == share);
      }
  }
}

TEST_CASE("components and diameter") {
  const Graph g = complement(gamma_i(8));
  const auto sets = component_vertex_sets(g);
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  CHECK(total == g.order());
  CHECK(sets.size() == oracle::components_without(g, {}));
  CHECK_FALSE(diameter(g).has_value());
  CHECK(diameter(Graph::with_order(1)) == 0);
}

TEST_CASE("girth") {
  CHECK(girth(complete_bipartite_graph(4, 4)) == 4);
  CHECK_FALSE(girth(star_graph(6)).has_value());
  CHECK(girth(complete_graph(8)) == 3);
  CHECK(girth(cycle_graph(7)) == 7);
}

TEST_CASE("2-connectivity and bridges") {
  CHECK(is_two_connected(cycle_graph(5)));
  CHECK_FALSE(is_two_connected(star_graph(4)));
  CHECK(find_cut_vertex(star_graph(4)) == Vertex{0});
  CHECK(bridges(star_graph(3)).size() == 3);
  CHECK(bridges(complete_graph(4)).empty());
}

TEST_CASE("labels are unique and self-loops are rejected") {
  CHECK_THROWS_AS(Graph(std::vector<std::string>{"a", "a"}), std::invalid_argument);
  Graph g = Graph::with_order(3);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK(g.at("2") == 2);
  CHECK_THROWS_AS(g.at("x"), std::out_of_range);
}

TEST_CASE("serial and parallel builders agree") {
  for (Int n : {12, 15, 25, 30}) {
    const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
    const Graph par = zero_divisor_graph(ring);
    CHECK(par == serial::zero_divisor_graph(ring));
    CHECK(complement(par) == serial::complement(par));
    CHECK(line_graph(par) == serial::line_graph(par));
  }
}
