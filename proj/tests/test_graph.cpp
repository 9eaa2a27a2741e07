#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"
#include "lscat/io.hpp"

using namespace lscat;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> es;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return SimpleGraph(n, es);
}

SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm = g.vertices();
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    es.push_back({perm[g.pos_of(u)], perm[g.pos_of(v)]});
  return SimpleGraph(g.vertices(), es);
}

}  // namespace

TEST_CASE("construction and accessors") {
  SimpleGraph k4 = SimpleGraph::complete(4);
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4.degree(0) == 3);
  CHECK(k4.adjacent(1, 3));
  CHECK_FALSE(k4.adjacent(2, 2));

  SimpleGraph c5 = SimpleGraph::cycle(5);
  CHECK(c5.size() == 5);
  CHECK(c5.neighbors(0) == std::vector<int>{1, 4});
  CHECK(c5.is_connected());

  // non-contiguous ids survive
  SimpleGraph g({3, 7, 10}, {{3, 7}, {7, 10}});
  CHECK(g.order() == 3);
  CHECK(g.has_vertex(10));
  CHECK_FALSE(g.has_vertex(0));
  CHECK(g.neighbors(7) == std::vector<int>{3, 10});
  CHECK_THROWS_AS(g.pos_of(4), GraphError);
}

TEST_CASE("rejects loops, duplicate edges, stray endpoints") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), GraphError);
}

TEST_CASE("induced subgraphs and spheres") {
  Fixture oct = fixture("octahedron");
  for (int v : oct.graph.vertices()) {
    SimpleGraph s = oct.graph.sphere(v);
    CHECK(s.order() == 4);
    CHECK(isomorphic(s, SimpleGraph::cycle(4)));
  }
  Fixture ico = fixture("icosahedron");
  for (int v : ico.graph.vertices())
    CHECK(isomorphic(ico.graph.sphere(v), SimpleGraph::cycle(5)));

  std::vector<int> sub{0, 1, 2};
  SimpleGraph p = SimpleGraph::path(5).induced(sub);
  CHECK(p.order() == 3);
  CHECK(p.size() == 2);
}

TEST_CASE("vertex and edge surgery returns copies") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  SimpleGraph h = c4.with_vertex_removed(2);
  CHECK(c4.order() == 4);
  CHECK(h.order() == 3);
  CHECK(h.size() == 2);

  std::vector<int> nbrs{0, 1};
  SimpleGraph cone = c4.with_vertex_added(9, nbrs);
  CHECK(cone.order() == 5);
  CHECK(cone.adjacent(9, 0));
  CHECK_THROWS_AS(c4.with_vertex_added(0, nbrs), GraphError);

  CHECK(c4.with_edge_added(0, 2).size() == 5);
  CHECK(c4.with_edge_removed(0, 1).size() == 3);
  CHECK_THROWS_AS(c4.with_edge_added(0, 1), GraphError);
  CHECK_THROWS_AS(c4.with_edge_removed(0, 2), GraphError);
}

TEST_CASE("components") {
  SimpleGraph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto comp = g.components();
  REQUIRE(comp.size() == 3);
  CHECK(comp[0] == std::vector<int>{0, 1, 2});
  CHECK(comp[1] == std::vector<int>{3, 4});
  CHECK(comp[2] == std::vector<int>{5});
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("clique complex strata and Euler characteristic") {
  Fixture oct = fixture("octahedron");
  CliqueComplex cx(oct.graph);
  CHECK(cx.dim() == 2);
  CHECK(cx.f_vector() == std::vector<int>{6, 12, 8});
  CHECK(cx.euler_characteristic() == 2);
  CHECK(euler_characteristic(oct.graph) == 2);

  CliqueComplex k5(SimpleGraph::complete(5));
  CHECK(k5.f_vector() == std::vector<int>{5, 10, 10, 5, 1});
  CHECK(k5.euler_characteristic() == 1);

  Simplex t = k5.stratum(2).front();
  CHECK(k5.index_of(t) == 0);
  CHECK(k5.index_of({0, 1, 99}) == -1);

  // capped construction stops at the requested dimension
  CliqueComplex capped(SimpleGraph::complete(5), 1);
  CHECK(capped.dim() == 1);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    SimpleGraph g = random_graph(rng, 10, 0.4);
    SimpleGraph back = parse_edge_list(serialize_edge_list(g));
    CHECK(back == g);
  }
  SimpleGraph iso = parse_edge_list("0 1\n\n# comment\n5\n");
  CHECK(iso.order() == 3);
  CHECK(iso.size() == 1);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
}

TEST_CASE("graph6 round trip and reference strings") {
  CHECK(serialize_graph6(SimpleGraph::discrete(1)) == "@");
  CHECK(serialize_graph6(SimpleGraph::complete(2)) == "A_");
  CHECK(serialize_graph6(SimpleGraph::path(3)) == "Bg");
  CHECK(parse_graph6(">>graph6<<A_").size() == 1);

  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    SimpleGraph g = random_graph(rng, 1 + (int)(rng() % 14), 0.5);
    SimpleGraph back = parse_graph6(serialize_graph6(g));
    CHECK(back.order() == g.order());
    CHECK(canonical_certificate(back) == canonical_certificate(g));
  }
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
}

TEST_CASE("json round trip") {
  Fixture f8 = fixture("figure8");
  SimpleGraph back = parse_graph_json(serialize_graph_json(f8.graph));
  CHECK(back == f8.graph);
}

TEST_CASE("format sniffing") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  CHECK(parse_any(serialize_graph6(c4)) == parse_graph6(serialize_graph6(c4)));
  CHECK(parse_any(serialize_edge_list(c4)) == c4);
  CHECK(parse_any(serialize_graph_json(c4)) == c4);
}

TEST_CASE("canonical certificates are isomorphism invariants") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    SimpleGraph g = random_graph(rng, 9, 0.5);
    SimpleGraph h = relabel(g, rng);
    CHECK(canonical_certificate(g) == canonical_certificate(h));
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    // the returned map is a genuine isomorphism
    for (auto [u, v] : g.edges()) {
      int iu = -1, iv = -1;
      for (auto [a, b] : *iso) {
        if (a == u) iu = b;
        if (a == v) iv = b;
      }
      CHECK(h.adjacent(iu, iv));
    }
  }
  // same degree sequence, different graphs
  SimpleGraph c6 = SimpleGraph::cycle(6);
  SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_certificate(c6) != canonical_certificate(two_triangles));
  CHECK_FALSE(isomorphic(c6, two_triangles));
  CHECK_FALSE(find_isomorphism(c6, two_triangles).has_value());
}

TEST_CASE("colored canonical forms separate colorings") {
  SimpleGraph p3 = SimpleGraph::path(3);
  std::vector<int> ends_marked{0, 1, 0};
  std::vector<int> mid_marked{1, 0, 1};
  CHECK(canonical_form(p3, &ends_marked).certificate !=
        canonical_form(p3, &mid_marked).certificate);
}
