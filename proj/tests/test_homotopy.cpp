#include <algorithm>
#include <random>

#include "doctest.h"
#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"
#include "lscat/io.hpp"

using namespace lscat;

namespace {

std::vector<int> trimmed_betti(const SimpleGraph& g) {
  std::vector<int> b = betti_numbers(g);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

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

}  // namespace

TEST_CASE("contractibility of standard graphs") {
  for (int n = 1; n <= 6; ++n) CHECK(is_contractible(SimpleGraph::complete(n)));
  for (int n = 2; n <= 7; ++n) CHECK(is_contractible(SimpleGraph::path(n)));
  CHECK(is_contractible(fixture("star_5").graph));
  CHECK(is_contractible(fixture("wheel_6").graph));
  CHECK(is_contractible(SimpleGraph::cycle(3)));  // a triangle is a disk
  for (int n = 4; n <= 8; ++n) CHECK_FALSE(is_contractible(SimpleGraph::cycle(n)));
  CHECK_FALSE(is_contractible(fixture("octahedron").graph));
  CHECK_FALSE(is_contractible(fixture("icosahedron").graph));
  CHECK_FALSE(is_contractible(fixture("figure8").graph));
  CHECK_FALSE(is_contractible(fixture("torus16").graph));
  CHECK_FALSE(is_contractible(SimpleGraph::discrete(2)));  // disconnected
}

TEST_CASE("removable vertices are exactly the contractible spheres") {
  SimpleGraph p5 = SimpleGraph::path(5);
  CHECK(removable_vertices(p5) == std::vector<int>{0, 4});
  CHECK(removable_vertices(SimpleGraph::cycle(6)).empty());
  CHECK(removable_vertices(SimpleGraph::complete(4)).size() == 4);
  for (int v : removable_vertices(fixture("wheel_6").graph))
    CHECK(is_contractible(fixture("wheel_6").graph.sphere(v)));
}

TEST_CASE("collapse order witnesses contractibility") {
  for (const char* name : {"complete_5", "wheel_6", "star_4", "path_6"}) {
    SimpleGraph g = fixture(name).graph;
    auto order = collapse_order(g);
    REQUIRE(order.has_value());
    CHECK(order->size() == (size_t)g.order() - 1);
    SimpleGraph h = g;
    for (int v : *order) {
      CHECK(is_contractible(h.sphere(v)));
      h = h.with_vertex_removed(v);
    }
    CHECK(h.order() == 1);
  }
  CHECK_FALSE(collapse_order(SimpleGraph::cycle(5)).has_value());
}

TEST_CASE("move legality") {
  SimpleGraph c5 = SimpleGraph::cycle(5);

  Move cone{MoveType::AddVertex, 9, {-1, -1}, {0, 1}};
  CHECK(move_legal(c5, cone));
  SimpleGraph coned = apply_move(c5, cone);
  CHECK(coned.order() == 6);
  CHECK(coned.adjacent(9, 0));

  // attaching over the whole cycle is not legal: the base is not contractible
  Move bad{MoveType::AddVertex, 9, {-1, -1}, {0, 1, 2, 3, 4}};
  std::string why;
  CHECK_FALSE(move_legal(c5, bad, &why));
  CHECK_FALSE(why.empty());
  CHECK_THROWS_AS(apply_move(c5, bad), GraphError);

  // chord across c5: the common-neighbor graph is one vertex
  Move chord{MoveType::AddEdge, -1, {0, 2}, {}};
  CHECK(move_legal(c5, chord));
  SimpleGraph with_chord = apply_move(c5, chord);

  // removing it again is legal for the same reason
  Move unchord{MoveType::RemoveEdge, -1, {0, 2}, {}};
  CHECK(move_legal(with_chord, unchord));

  // chord across c4: the common-neighbor graph is two isolated vertices
  SimpleGraph c4 = SimpleGraph::cycle(4);
  Move diag{MoveType::AddEdge, -1, {0, 2}, {}};
  CHECK_FALSE(move_legal(c4, diag));

  Move rem{MoveType::RemoveVertex, 0, {-1, -1}, {}};
  CHECK_FALSE(move_legal(c4, rem));
  CHECK(move_legal(SimpleGraph::complete(3), rem));
}

TEST_CASE("reduce finds cores deterministically") {
  CHECK(reduce(fixture("wheel_6").graph).core.order() == 1);
  CHECK(reduce(SimpleGraph::complete(6)).core.order() == 1);
  CHECK(reduce(SimpleGraph::cycle(5)).core == SimpleGraph::cycle(5));
  Fixture oct = fixture("octahedron");
  CHECK(reduce(oct.graph).core == oct.graph);

  // same input, same certificate
  Reduction a = reduce(fixture("wheel_6").graph);
  Reduction b = reduce(fixture("wheel_6").graph);
  REQUIRE(a.cert.moves.size() == b.cert.moves.size());
  for (size_t i = 0; i < a.cert.moves.size(); ++i)
    CHECK(a.cert.moves[i].vertex == b.cert.moves[i].vertex);

  VerifyOutcome out = verify_certificate(fixture("wheel_6").graph, a.cert);
  CHECK(out.ok);
  CHECK(out.final_graph.order() == 1);
}

TEST_CASE("certificate json round trip") {
  Reduction r = reduce(fixture("complete_4").graph);
  std::string text = certificate_to_json(fixture("complete_4").graph, r.cert,
                                          r.core, std::nullopt);
  CertificateFile file = certificate_from_json(text);
  CHECK(file.start == fixture("complete_4").graph);
  REQUIRE(file.end.has_value());
  CHECK(*file.end == r.core);
  VerifyOutcome out = verify_certificate(file.start, file.cert);
  CHECK(out.ok);
  CHECK(canonical_certificate(out.final_graph) == canonical_certificate(*file.end));
}

TEST_CASE("bad certificates are rejected with a reason") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  Certificate cert;
  cert.moves.push_back({MoveType::RemoveVertex, 0, {-1, -1}, {}});
  VerifyOutcome out = verify_certificate(c4, cert);
  CHECK_FALSE(out.ok);
  CHECK_FALSE(out.message.empty());
}

TEST_CASE("ambient contractibility") {
  // single vertices are always contractible within the ambient graph
  Fixture oct = fixture("octahedron");
  CHECK(contractible_in(oct.graph, {0}) == AmbientAnswer::Contractible);

  // the rim cycle shrinks inside a wheel
  SimpleGraph w = fixture("wheel_6").graph;
  std::vector<int> rim;
  for (int v : w.vertices())
    if (v != 0) rim.push_back(v);
  CHECK(contractible_in(w, rim) == AmbientAnswer::Contractible);

  // a core has no moves: ambient contractibility degenerates
  CHECK(contractible_in(SimpleGraph::cycle(6), {0, 1, 2, 3, 4, 5}) ==
        AmbientAnswer::NotContractible);

  AmbientBudget tiny{1};
  CHECK(contractible_in(w, rim, tiny) == AmbientAnswer::Unknown);
}

TEST_CASE("bounded homotopy search") {
  HomotopyBudget budget{2, 200000};
  HomotopyResult r = homotopic_bounded(SimpleGraph::cycle(4), SimpleGraph::cycle(6), budget);
  CHECK(r.answer == HomotopyAnswer::Equivalent);
  REQUIRE(r.certificate.has_value());
  VerifyOutcome out = verify_certificate(SimpleGraph::cycle(4), *r.certificate);
  CHECK(out.ok);
  CHECK(isomorphic(out.final_graph, SimpleGraph::cycle(6)));

  CHECK(homotopic_bounded(SimpleGraph::complete(4), SimpleGraph::discrete(1), budget).answer ==
        HomotopyAnswer::Equivalent);

  // Betti numbers separate these regardless of budget
  CHECK(homotopic_bounded(SimpleGraph::cycle(4), SimpleGraph::discrete(1), budget).answer ==
        HomotopyAnswer::Distinct);
  CHECK(homotopic_bounded(fixture("figure8").graph, SimpleGraph::cycle(4), budget).answer ==
        HomotopyAnswer::Distinct);
}

TEST_CASE("random legal moves preserve chi, Betti and cup") {
  std::mt19937_64 rng(71);
  int applied = 0;
  while (applied < 60) {
    SimpleGraph g = random_connected(rng, 5 + (int)(rng() % 2), 0.55);
    // collect legal moves of every kind
    std::vector<Move> moves;
    for (int v : g.vertices()) {
      Move m{MoveType::RemoveVertex, v, {-1, -1}, {}};
      if (g.order() > 1 && move_legal(g, m)) moves.push_back(m);
    }
    std::vector<int> vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) {
        Move m{g.adjacent(vs[i], vs[j]) ? MoveType::RemoveEdge : MoveType::AddEdge,
               -1,
               {vs[i], vs[j]},
               {}};
        if (move_legal(g, m)) moves.push_back(m);
      }
    uint64_t cap = 200;
    for (uint64_t mask : contractible_base_masks(g, cap)) {
      std::vector<int> base;
      for (size_t p = 0; p < vs.size(); ++p)
        if ((mask >> p) & 1) base.push_back(g.id_at((int)p));
      Move m{MoveType::AddVertex, *std::max_element(vs.begin(), vs.end()) + 1, {-1, -1}, base};
      if (move_legal(g, m)) moves.push_back(m);
    }
    if (moves.empty()) continue;
    Move pick = moves[rng() % moves.size()];
    SimpleGraph h = apply_move(g, pick);
    ++applied;
    CHECK(euler_characteristic(g) == euler_characteristic(h));
    CHECK(trimmed_betti(g) == trimmed_betti(h));
    CupResult cg = cup_length(g), ch = cup_length(h);
    REQUIRE(cg.tight());
    REQUIRE(ch.tight());
    CHECK(cg.lower == ch.lower);
  }
}

TEST_CASE("contractibility cache stores canonical keys") {
  ContractibilityCache& cache = ContractibilityCache::instance();
  SimpleGraph g = SimpleGraph::cycle(7);
  is_contractible(g);
  CHECK(cache.lookup(canonical_certificate(g)).has_value());
  CHECK(*cache.lookup(canonical_certificate(g)) == false);
}
