#include "lscat/fixtures.hpp"

#include <algorithm>
#include <charconv>

namespace lscat {
namespace {

using Edge = std::pair<int, int>;

std::optional<int> parse_suffix(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int n = 0;
  const char* b = name.data() + prefix.size();
  const char* e = name.data() + name.size();
  auto [p, ec] = std::from_chars(b, e, n);
  if (ec != std::errc() || p != e || n < 0) return std::nullopt;
  return n;
}

SimpleGraph star(int leaves) {
  std::vector<int> vs{0};
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) {
    vs.push_back(i);
    es.emplace_back(0, i);
  }
  return SimpleGraph(vs, es);
}

SimpleGraph wheel(int rim) {
  std::vector<int> vs{0};
  std::vector<Edge> es;
  for (int i = 1; i <= rim; ++i) {
    vs.push_back(i);
    es.emplace_back(0, i);
    es.emplace_back(i, i % rim + 1);
  }
  return SimpleGraph(vs, es);
}

// Complete multipartite graph with `parts` parts of size 2: the boundary
// complex of the cross-polytope; antipodes are i and i + parts.
SimpleGraph cocktail(int parts) {
  std::vector<int> vs;
  std::vector<Edge> es;
  int n = 2 * parts;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j - i != parts) es.emplace_back(i, j);
  return SimpleGraph(vs, es);
}

SimpleGraph icosahedron() {
  // 0 apex; 1..5 upper ring; 6..10 lower ring (i ~ 5+i and 5+(i mod 5)+1); 11 apex.
  std::vector<int> vs;
  for (int i = 0; i < 12; ++i) vs.push_back(i);
  std::vector<Edge> es;
  for (int i = 1; i <= 5; ++i) {
    int j = i % 5 + 1;
    es.emplace_back(0, i);
    es.emplace_back(i, j);
    es.emplace_back(5 + i, 5 + j);
    es.emplace_back(11, 5 + i);
    es.emplace_back(i, 5 + i);
    es.emplace_back(j, 5 + i);
  }
  return SimpleGraph(vs, es);
}

Fixture figure8() {
  // Two 4-cycles sharing vertex 0.
  std::vector<int> vs{0, 1, 2, 3, 4, 5, 6};
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}};
  Fixture f;
  f.name = "figure8";
  f.description = "two 4-cycles glued at a vertex";
  f.graph = SimpleGraph(vs, es);
  // Two contractible members covering all vertices and edges: a spanning
  // double path through 0 (not induced) and a path closing both cycles.
  CoverMemberSpec u1{{0, 1, 2, 3, 4, 5, 6},
                     std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}};
  CoverMemberSpec u2{{3, 0, 6}, std::vector<Edge>{{3, 0}, {6, 0}}};
  f.covers["loops"] = CoverSpec{u1, u2};
  return f;
}

Fixture torus16() {
  // 4x4 triangular torus, row-major labels 1..16 (label = 4*row + col + 1);
  // wrap-around rows and columns, diagonals along (row+1, col+1).
  auto id = [](int r, int c) { return 4 * ((r % 4 + 4) % 4) + ((c % 4 + 4) % 4) + 1; };
  std::vector<int> vs;
  for (int v = 1; v <= 16; ++v) vs.push_back(v);
  std::vector<Edge> es;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      es.emplace_back(id(r, c), id(r, c + 1));
      es.emplace_back(id(r, c), id(r + 1, c));
      es.emplace_back(id(r, c), id(r + 1, c + 1));
    }
  Fixture f;
  f.name = "torus16";
  f.description = "triangulated 4x4 torus";
  f.graph = SimpleGraph(vs, es);
  f.covers["category"] = CoverSpec{
      CoverMemberSpec{{2, 3, 4, 6, 7, 8, 10, 11, 12}, std::nullopt},
      CoverMemberSpec{{5, 6, 8, 9, 10, 11, 13, 14, 15}, std::nullopt},
      CoverMemberSpec{{11, 12, 9, 15, 16, 13, 3, 4, 1}, std::nullopt},
  };
  f.orderings["morse"] = {1, 2, 5, 3, 9, 4, 6, 7, 10, 13, 8, 11, 12, 14, 15, 16};
  return f;
}

Fixture dunce_hat() {
  // Dunce hat: a triangulated disk whose boundary winds three times around
  // the rim square 0-1-2-3 (forward, forward, backward). 4..15 is the disk
  // boundary circle, 16 the disk center; the winding assigns each boundary
  // arc to a rim vertex. chi = 1 and all Betti numbers vanish, yet the graph
  // is not contractible: no vertex has a contractible sphere (rim spheres
  // are figure eights, the rest are circles). Found by search over windings.
  std::vector<int> vs;
  for (int i = 0; i < 17; ++i) vs.push_back(i);
  std::vector<Edge> es{
      {0, 1},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 11},  {0, 12},
      {0, 14},  {1, 2},   {1, 4},   {1, 6},   {1, 7},   {1, 8},   {1, 12},
      {1, 13},  {2, 3},   {2, 4},   {2, 8},   {2, 9},   {2, 10},  {2, 13},
      {2, 15},  {3, 10},  {3, 11},  {3, 13},  {3, 14},  {3, 15},  {4, 5},
      {4, 15},  {4, 16},  {5, 6},   {5, 16},  {6, 7},   {6, 16},  {7, 8},
      {7, 16},  {8, 9},   {8, 16},  {9, 10},  {9, 16},  {10, 11}, {10, 16},
      {11, 12}, {11, 16}, {12, 13}, {12, 16}, {13, 14}, {13, 16}, {14, 15},
      {14, 16}, {15, 16}};
  Fixture f;
  f.name = "dunce_hat";
  f.description = "flag triangulation of the dunce hat";
  f.graph = SimpleGraph(vs, es);
  // Two-member cover, both contractible in themselves: cutting the four
  // marked edges leaves a collapsible graph, and the cut itself is a star.
  std::vector<Edge> star{{0, 3}, {0, 11}, {0, 12}, {0, 14}};
  std::vector<Edge> body;
  for (const Edge& e : es)
    if (std::find(star.begin(), star.end(), e) == star.end()) body.push_back(e);
  f.covers["category"] = CoverSpec{CoverMemberSpec{vs, body},
                                   CoverMemberSpec{{0, 3, 11, 12, 14}, star}};
  // Ordering with the minimal three critical points (center first).
  f.orderings["crit"] = {16, 15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
  return f;
}

}  // namespace

Fixture fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (auto n = parse_suffix(name, "path_")) {
    if (*n < 1) throw GraphError("path_n needs n >= 1");
    f.description = "path";
    f.graph = SimpleGraph::path(*n);
    return f;
  }
  if (auto n = parse_suffix(name, "cycle_")) {
    if (*n < 3) throw GraphError("cycle_n needs n >= 3");
    f.description = "cycle";
    f.graph = SimpleGraph::cycle(*n);
    if (*n >= 4) {
      // Three-vertex arcs covering all edges; contractible members.
      std::vector<int> u1, u2;
      for (int i = 0; i <= *n / 2; ++i) u1.push_back(i);
      for (int i = *n / 2; i < *n; ++i) u2.push_back(i);
      u2.push_back(0);
      std::vector<Edge> e1, e2;
      for (size_t i = 0; i + 1 < u1.size(); ++i) e1.emplace_back(u1[i], u1[i + 1]);
      for (size_t i = 0; i + 1 < u2.size(); ++i) e2.emplace_back(u2[i], u2[i + 1]);
      f.covers["arcs"] = CoverSpec{CoverMemberSpec{u1, e1}, CoverMemberSpec{u2, e2}};
    }
    return f;
  }
  if (auto n = parse_suffix(name, "complete_")) {
    if (*n < 1) throw GraphError("complete_n needs n >= 1");
    f.description = "complete graph";
    f.graph = SimpleGraph::complete(*n);
    return f;
  }
  if (auto n = parse_suffix(name, "star_")) {
    if (*n < 1) throw GraphError("star_n needs n >= 1 leaves");
    f.description = "star";
    f.graph = star(*n);
    return f;
  }
  if (auto n = parse_suffix(name, "wheel_")) {
    if (*n < 4) throw GraphError("wheel_n needs rim length n >= 4");
    f.description = "wheel: cone over a cycle";
    f.graph = wheel(*n);
    return f;
  }
  if (auto n = parse_suffix(name, "discrete_")) {
    if (*n < 1) throw GraphError("discrete_n needs n >= 1");
    f.description = "edgeless graph";
    f.graph = SimpleGraph::discrete(*n);
    return f;
  }
  if (name == "octahedron") {
    f.description = "octahedron: 2-sphere, 16-cell boundary in one lower dimension";
    f.graph = cocktail(3);
    f.covers["hemispheres"] = CoverSpec{CoverMemberSpec{{0, 1, 2}, std::nullopt},
                                        CoverMemberSpec{{3, 4, 5}, std::nullopt}};
    return f;
  }
  if (name == "cross_polytope_3") {
    f.description = "boundary of the 3-dimensional cross-polytope (16-cell), a 3-sphere";
    f.graph = cocktail(4);
    f.covers["hemispheres"] = CoverSpec{CoverMemberSpec{{0, 1, 2, 3}, std::nullopt},
                                        CoverMemberSpec{{4, 5, 6, 7}, std::nullopt}};
    return f;
  }
  if (name == "icosahedron") {
    Fixture g;
    g.name = name;
    g.description = "icosahedron: vertex-transitive 2-sphere";
    g.graph = icosahedron();
    g.orderings["height"] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    return g;
  }
  if (name == "figure8") return figure8();
  if (name == "dunce_hat") return dunce_hat();
  if (name == "torus16") return torus16();
  throw GraphError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  // Parametric families are listed with a representative size; any N works.
  return {"path_4",     "cycle_4",     "cycle_5",          "complete_4", "star_5",    "wheel_5",
          "octahedron", "icosahedron", "cross_polytope_3", "figure8",    "dunce_hat", "torus16"};
}

}  // namespace lscat
