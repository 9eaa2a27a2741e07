#include <random>

#include "doctest.h"
#include "lscat/category.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/curvature.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"

using namespace lscat;

namespace {

SimpleGraph random_connected(std::mt19937_64& rng, int n, double p) {
  while (true) {
    std::vector<std::pair<int, int>> es;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) es.push_back({i, j});
    SimpleGraph g(n, es);
    if (g.is_connected()) return g;
  }
}

Rational value(const VertexCurvature& e) {
  REQUIRE(e.lower == e.upper);
  return e.lower;
}

}  // namespace

TEST_CASE("euler curvature of circles vanishes") {
  for (int n = 4; n <= 8; ++n) {
    CurvatureReport r = euler_curvature(SimpleGraph::cycle(n));
    CHECK(r.tag == CurvatureTag::Exact);
    for (const auto& e : r.entries) CHECK(value(e) == 0);
    CHECK(r.total_lower == 0);
    CHECK(r.total_upper == 0);
  }
}

TEST_CASE("euler curvature of paths concentrates on the boundary") {
  CurvatureReport r = euler_curvature(SimpleGraph::path(6));
  CHECK(r.tag == CurvatureTag::Exact);
  for (const auto& e : r.entries) {
    if (e.vertex == 0 || e.vertex == 5)
      CHECK(value(e) == Rational(1, 2));
    else
      CHECK(value(e) == 0);
  }
  CHECK(r.total_lower == 1);
}

TEST_CASE("euler curvature of complete graphs is uniform") {
  for (int n = 2; n <= 6; ++n) {
    CurvatureReport r = euler_curvature(SimpleGraph::complete(n));
    CHECK(r.tag == CurvatureTag::Exact);
    for (const auto& e : r.entries) CHECK(value(e) == Rational(1, n));
    CHECK(r.total_lower == 1);
  }
}

TEST_CASE("euler curvature is the local clique alternating sum") {
  // K(x) = 1 - e0/2 + e1/3 - e2/4 ... with ek the k-cliques of the sphere
  Fixture oct = fixture("octahedron");
  CurvatureReport r = euler_curvature(oct.graph);
  CHECK(r.tag == CurvatureTag::Exact);
  for (const auto& e : r.entries) CHECK(value(e) == Rational(1, 3));  // 1 - 4/2 + 4/3
  CHECK(r.total_lower == 2);

  Fixture ico = fixture("icosahedron");
  CurvatureReport ri = euler_curvature(ico.graph);
  for (const auto& e : ri.entries) CHECK(value(e) == Rational(1, 6));  // 1 - 5/2 + 5/3
  CHECK(ri.total_lower == 2);
}

TEST_CASE("Gauss-Bonnet: curvature sums to chi on random graphs") {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 30; ++t) {
    SimpleGraph g = random_connected(rng, 4 + (int)(rng() % 6), 0.5);
    CurvatureReport r = euler_curvature(g);
    CHECK(r.tag == CurvatureTag::Exact);
    Rational sum = 0;
    for (const auto& e : r.entries) sum += value(e);
    CHECK(sum == Rational((long)euler_characteristic(g)));
    CHECK(r.total_lower == sum);
  }
}

TEST_CASE("monte-carlo euler curvature brackets the exact value") {
  // degree above the cap forces sampling on the hub
  SimpleGraph star = fixture("star_20").graph;
  CurvatureReport mc = euler_curvature(star, 16, 20000, 7);
  CHECK(mc.tag == CurvatureTag::MonteCarlo);
  CHECK(mc.samples > 0);
  for (const auto& e : mc.entries) {
    CHECK(e.lower <= e.upper);
    // hub: 1 - E[#earlier leaves] = 1 - 20/2 = -9; leaves stay exact at 1/2
    Rational truth = star.degree(e.vertex) == 20 ? Rational(-9) : Rational(1, 2);
    CHECK(e.lower <= truth);
    CHECK(truth <= e.upper);
  }
  CHECK(mc.total_lower <= 1);
  CHECK(1 <= mc.total_upper);
}

TEST_CASE("betti curvature totals the Betti number") {
  CurvatureReport b1 = betti_curvature(SimpleGraph::cycle(6), 1);
  CHECK(b1.tag == CurvatureTag::Exact);
  CHECK(b1.total_lower == 1);
  CHECK(b1.total_upper == 1);
  // symmetry: every vertex carries 1/6 of the loop
  for (const auto& e : b1.entries) CHECK(value(e) == Rational(1, 6));

  CurvatureReport b0 = betti_curvature(SimpleGraph::path(5), 0);
  CHECK(b0.tag == CurvatureTag::Exact);
  CHECK(b0.total_lower == 1);

  CurvatureReport b2 = betti_curvature(fixture("octahedron").graph, 2);
  CHECK(b2.tag == CurvatureTag::Exact);
  CHECK(b2.total_lower == 1);
  for (const auto& e : b2.entries) CHECK(value(e) == Rational(1, 6));
}

TEST_CASE("category curvature: telescoping fixes the totals") {
  CategoryEvaluator eval = default_category_evaluator();

  // circles: first vertex and the closing vertex carry the category
  for (int n = 4; n <= 6; ++n) {
    CurvatureReport r = category_curvature(SimpleGraph::cycle(n), eval);
    CHECK(r.tag == CurvatureTag::Exact);
    for (const auto& e : r.entries) CHECK(value(e) == Rational(2, n));
    CHECK(r.total_lower == 2);
  }

  // paths: half a unit on each end, nothing inside
  CurvatureReport p = category_curvature(SimpleGraph::path(5), eval);
  CHECK(p.tag == CurvatureTag::Exact);
  for (const auto& e : p.entries) {
    if (e.vertex == 0 || e.vertex == 4)
      CHECK(value(e) == Rational(1, 2));
    else
      CHECK(value(e) == 0);
  }
  CHECK(p.total_lower == 1);

  // complete graphs: only the global minimum opens a set
  for (int n = 3; n <= 5; ++n) {
    CurvatureReport k = category_curvature(SimpleGraph::complete(n), eval);
    CHECK(k.tag == CurvatureTag::Exact);
    for (const auto& e : k.entries) CHECK(value(e) == Rational(1, n));
    CHECK(k.total_lower == 1);
  }

  // octahedron: total telescopes to cat = 2, so symmetry gives 1/3 per vertex
  CurvatureReport oct = category_curvature(fixture("octahedron").graph, eval);
  for (const auto& e : oct.entries) {
    CHECK(e.lower <= Rational(1, 3));
    CHECK(Rational(1, 3) <= e.upper);
  }
  CHECK(oct.total_lower <= 2);
  CHECK(2 <= oct.total_upper);
}

TEST_CASE("category curvature goes monte-carlo past the exact limit") {
  CategoryEvaluator eval = default_category_evaluator();
  CurvatureReport mc = category_curvature(fixture("icosahedron").graph, eval, 8, 400, 5);
  CHECK(mc.tag == CurvatureTag::MonteCarlo);
  // truth 1/6 per vertex by symmetry; the 99% radius should cover it
  for (const auto& e : mc.entries) {
    CHECK(e.lower <= Rational(1, 6));
    CHECK(Rational(1, 6) <= e.upper);
  }
}

TEST_CASE("curvature reports are seeded and reproducible") {
  SimpleGraph star = fixture("star_20").graph;
  CurvatureReport a = euler_curvature(star, 16, 5000, 42);
  CurvatureReport b = euler_curvature(star, 16, 5000, 42);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].lower == b.entries[i].lower);
    CHECK(a.entries[i].upper == b.entries[i].upper);
  }
}
