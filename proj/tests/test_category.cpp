#include <random>

#include "doctest.h"
#include "lscat/category.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"
#include "lscat/morse.hpp"

using namespace lscat;

namespace {

Cover fixture_cover(const std::string& fixture_name, const std::string& cover_name) {
  Fixture f = fixture(fixture_name);
  Cover c;
  c.members = f.covers.at(cover_name);
  return c;
}

}  // namespace

TEST_CASE("member graphs: induced and explicit") {
  SimpleGraph c5 = SimpleGraph::cycle(5);
  CoverMember induced{{0, 1, 2}, std::nullopt};
  SimpleGraph mi = member_graph(c5, induced);
  CHECK(mi.order() == 3);
  CHECK(mi.size() == 2);

  CoverMember explicit_member{{0, 1, 2}, std::vector<std::pair<int, int>>{{0, 1}}};
  CHECK(member_graph(c5, explicit_member).size() == 1);

  CoverMember stray_vertex{{0, 99}, std::nullopt};
  CHECK_THROWS_AS(member_graph(c5, stray_vertex), GraphError);
  CoverMember non_edge{{0, 1, 2}, std::vector<std::pair<int, int>>{{0, 2}}};
  CHECK_THROWS_AS(member_graph(c5, non_edge), GraphError);
  CoverMember outside{{0, 1}, std::vector<std::pair<int, int>>{{2, 3}}};
  CHECK_THROWS_AS(member_graph(c5, outside), GraphError);
}

TEST_CASE("cover json round trip") {
  Cover c = fixture_cover("figure8", "loops");
  Cover back = cover_from_json(cover_to_json(c));
  REQUIRE(back.members.size() == c.members.size());
  for (size_t i = 0; i < c.members.size(); ++i) {
    CHECK(back.members[i].vertices == c.members[i].vertices);
    CHECK(back.members[i].edges == c.members[i].edges);
  }
}

TEST_CASE("cover verification: coverage accounting") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  Cover missing_vertex;
  missing_vertex.members.push_back({{0, 1, 2}, std::nullopt});
  CoverVerification cv = verify_cover(c4, missing_vertex, CoverMode::InItself);
  CHECK_FALSE(cv.coverage_ok);
  CHECK(cv.uncovered_vertices == std::vector<int>{3});
  CHECK_FALSE(cv.ok);

  // all vertices present but one edge missed
  Cover missing_edge;
  missing_edge.members.push_back({{0, 1, 2}, std::nullopt});
  missing_edge.members.push_back({{2, 3}, std::nullopt});
  CoverVerification ce = verify_cover(c4, missing_edge, CoverMode::InItself);
  CHECK_FALSE(ce.coverage_ok);
  CHECK(ce.uncovered_edges == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("cover verification: member verdicts") {
  SimpleGraph c4 = SimpleGraph::cycle(4);
  // two paths cover the square; both contractible in themselves
  Cover paths;
  paths.members.push_back({{0, 1, 2}, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}});
  paths.members.push_back({{2, 3, 0}, std::vector<std::pair<int, int>>{{2, 3}, {0, 3}}});
  CoverVerification cv = verify_cover(c4, paths, CoverMode::InItself);
  CHECK(cv.ok);
  REQUIRE(cv.bound.has_value());
  CHECK(*cv.bound == 2);
  for (const auto& m : cv.members) CHECK(m.status == MemberStatus::ContractibleItself);

  // the whole cycle as a single member never verifies
  Cover whole;
  whole.members.push_back({{0, 1, 2, 3}, std::nullopt});
  CoverVerification cw = verify_cover(c4, whole, CoverMode::InItself);
  CHECK(cw.coverage_ok);
  CHECK_FALSE(cw.ok);
  CHECK(cw.members[0].status == MemberStatus::Failed);

  // in-G mode on a graph with moves: the rim of a wheel shrinks through the hub
  SimpleGraph w = fixture("wheel_5").graph;
  std::vector<int> rim;
  std::vector<std::pair<int, int>> spokes;
  for (int v : w.vertices())
    if (v != 0) {
      rim.push_back(v);
      spokes.emplace_back(0, v);
    }
  Cover rim_cover;
  rim_cover.members.push_back({rim, std::nullopt});
  rim_cover.members.push_back({w.vertices(), spokes});
  CoverVerification cg = verify_cover(w, rim_cover, CoverMode::InG);
  CHECK(cg.coverage_ok);
  CHECK(cg.ok);
  CHECK(cg.members[0].status == MemberStatus::ContractibleInG);
}

TEST_CASE("fixture covers verify") {
  CoverVerification f8 =
      verify_cover(fixture("figure8").graph, fixture_cover("figure8", "loops"),
                   CoverMode::InItself);
  CHECK(f8.ok);
  CHECK(*f8.bound == 2);

  CoverVerification torus =
      verify_cover(fixture("torus16").graph, fixture_cover("torus16", "category"),
                   CoverMode::InItself);
  CHECK(torus.ok);
  CHECK(*torus.bound == 3);

  CoverVerification dunce =
      verify_cover(fixture("dunce_hat").graph, fixture_cover("dunce_hat", "category"),
                   CoverMode::InItself);
  CHECK(dunce.ok);
  CHECK(*dunce.bound == 2);
}

TEST_CASE("gcat on reference spaces") {
  GcatResult k = gcat_exact(SimpleGraph::complete(5));
  REQUIRE(k.exact);
  CHECK(k.value == 1);

  for (int n = 4; n <= 7; ++n) {
    GcatResult c = gcat_exact(SimpleGraph::cycle(n));
    REQUIRE(c.exact);
    CHECK(c.value == 2);
    REQUIRE(c.cover.has_value());
    CHECK(verify_cover(SimpleGraph::cycle(n), *c.cover, CoverMode::InItself).ok);
  }

  GcatResult oct = gcat_exact(fixture("octahedron").graph);
  REQUIRE(oct.exact);
  CHECK(oct.value == 2);

  GcatResult f8 = gcat_exact(fixture("figure8").graph);
  REQUIRE(f8.exact);
  CHECK(f8.value == 2);

  CHECK_FALSE(gcat_exact(fixture("torus16").graph, 8).exact);
}

TEST_CASE("tcat brackets on reference spaces") {
  TcatOptions opt;
  CategoryBracket k = tcat_bracket(SimpleGraph::complete(4), opt);
  CHECK(k.lower == 1);
  CHECK(k.upper == 1);

  for (int n = 4; n <= 7; ++n) {
    CategoryBracket c = tcat_bracket(SimpleGraph::cycle(n), opt);
    CHECK(c.lower == 2);
    CHECK(c.upper == 2);
  }

  CategoryBracket oct = tcat_bracket(fixture("octahedron").graph, opt);
  CHECK(oct.lower == 2);
  CHECK(oct.upper == 2);

  // covers attached to fixtures tighten the bracket
  TcatOptions with_cover;
  with_cover.covers = {fixture_cover("torus16", "category")};
  with_cover.dp_limit = 16;
  CategoryBracket torus = tcat_bracket(fixture("torus16").graph, with_cover);
  CHECK(torus.lower == 3);
  CHECK(torus.upper == 3);

  TcatOptions dunce_opt;
  dunce_opt.covers = {fixture_cover("dunce_hat", "category")};
  dunce_opt.dp_limit = 17;
  CategoryBracket dunce = tcat_bracket(fixture("dunce_hat").graph, dunce_opt);
  CHECK(dunce.lower == 2);
  CHECK(dunce.upper == 2);
}

TEST_CASE("sandwich cup <= tcat <= min(gcat, crit) on random graphs") {
  std::mt19937_64 rng(61);
  int done = 0;
  while (done < 30) {
    std::vector<std::pair<int, int>> es;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (coin(rng)) es.push_back({i, j});
    SimpleGraph g(6, es);
    if (!g.is_connected()) continue;
    ++done;
    CupResult cup = cup_length(g);
    REQUIRE(cup.tight());
    CategoryBracket t = tcat_bracket(g);
    GcatResult gc = gcat_exact(g);
    CritResult cr = crit_exact(g);
    REQUIRE(gc.exact);
    REQUIRE(cr.exact);
    CHECK(cup.lower <= t.lower);
    CHECK(t.lower <= t.upper);
    CHECK(t.upper <= gc.value);
    CHECK(t.upper <= cr.value);
    CHECK((t.lower == 1) == is_contractible(g));
  }
}

TEST_CASE("cat and cri brackets respect the sandwich") {
  // contractible graphs: everything is 1
  CategoryBracket cat_k = cat_bracket(SimpleGraph::complete(4));
  CHECK(cat_k.lower == 1);
  CHECK(cat_k.upper == 1);
  CategoryBracket cri_k = cri_bracket(SimpleGraph::complete(4));
  CHECK(cri_k.lower == 1);
  CHECK(cri_k.upper == 1);

  // circles: homotopy class minimum still needs 2 sets / 2 critical points
  CategoryBracket cat_c = cat_bracket(SimpleGraph::cycle(6));
  CHECK(cat_c.lower == 2);
  CHECK(cat_c.upper == 2);
  CategoryBracket cri_c = cri_bracket(SimpleGraph::cycle(6));
  CHECK(cri_c.lower == 2);
  CHECK(cri_c.upper == 2);

  // figure 8: cup says 2, crit of every scanned representative stays 3
  CategoryBracket cri_f8 = cri_bracket(fixture("figure8").graph);
  CHECK(cri_f8.lower == 2);
  CHECK(cri_f8.upper == 3);
  CategoryBracket cat_f8 = cat_bracket(fixture("figure8").graph);
  CHECK(cat_f8.lower == 2);
  CHECK(cat_f8.upper == 2);
}

TEST_CASE("normalize_cover keeps verification and size") {
  SimpleGraph g = fixture("octahedron").graph;
  GcatResult gc = gcat_exact(g);
  REQUIRE(gc.cover.has_value());
  // merge a contractible edge into the members meeting it
  std::vector<int> h{g.vertices()[0], g.neighbors(g.vertices()[0])[0]};
  Cover n = normalize_cover(g, *gc.cover, h);
  CHECK(n.members.size() == gc.cover->members.size());
  CoverVerification cv = verify_cover(g, n, CoverMode::InItself);
  CHECK(cv.coverage_ok);
  for (const auto& m : n.members) {
    bool all = true, none = true;
    for (int v : h) {
      bool in = std::find(m.vertices.begin(), m.vertices.end(), v) != m.vertices.end();
      all = all && in;
      none = none && !in;
    }
    CHECK((all || none));
  }
}

TEST_CASE("default evaluator closes easy prefixes") {
  CategoryBracket one = evaluate_cat(SimpleGraph::path(4));
  CHECK(one.lower == 1);
  CHECK(one.upper == 1);
  CategoryBracket two = evaluate_cat(SimpleGraph::cycle(5));
  CHECK(two.lower == 2);
  CHECK(two.upper == 2);
  CategoryBracket disc = evaluate_cat(SimpleGraph::discrete(1));
  CHECK(disc.lower == 1);
  CHECK(disc.upper == 1);
}
