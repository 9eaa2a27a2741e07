#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lscat/category.hpp"
#include "lscat/graph.hpp"

namespace lscat {

using CoverMemberSpec = CoverMember;
using CoverSpec = std::vector<CoverMember>;

struct Fixture {
  std::string name;
  std::string description;
  SimpleGraph graph;
  std::map<std::string, CoverSpec> covers;
  // Vertex orderings (increasing function values), e.g. Morse orderings.
  std::map<std::string, std::vector<int>> orderings;
};

// Names: path_N, cycle_N, complete_N, star_N, wheel_N, discrete_N,
// octahedron, icosahedron, cross_polytope_3, figure8, dunce_hat, torus16.
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace lscat
