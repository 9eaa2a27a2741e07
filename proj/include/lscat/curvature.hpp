#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscat/bracket.hpp"
#include "lscat/graph.hpp"
#include "lscat/rational.hpp"

namespace lscat {

enum class CurvatureTag { Exact, Bracket, MonteCarlo };

struct VertexCurvature {
  int vertex = -1;
  Rational lower = 0;  // lower == upper when exact
  Rational upper = 0;
};

struct CurvatureReport {
  std::string kind;  // "euler" | "betti:k" | "category"
  CurvatureTag tag = CurvatureTag::Exact;
  std::vector<VertexCurvature> entries;
  Rational total_lower = 0;
  Rational total_upper = 0;
  // Monte-Carlo metadata (99% CLT confidence radius added to the bounds).
  std::size_t samples = 0;
};

// K(x) = E[i_f(x)] over uniform injective orderings. Exact neighbour-subset
// enumeration up to degree_cap; Monte-Carlo beyond, tagged.
CurvatureReport euler_curvature(const SimpleGraph& g, int degree_cap = 16,
                                std::size_t mc_samples = 20000, std::uint64_t seed = 0);

// B_k(x) = E[change of b_k when x enters the filtration]. Exact subset
// expectation up to exact_limit vertices; Monte-Carlo beyond.
CurvatureReport betti_curvature(const SimpleGraph& g, int k, int exact_limit = 8,
                                std::size_t mc_samples = 2000, std::uint64_t seed = 0);

// C(x) = E[k_f(x)]. Exact subset expectation with evaluator brackets up to
// exact_limit vertices (tag Bracket when some prefix stays open);
// Monte-Carlo over orderings beyond.
CurvatureReport category_curvature(const SimpleGraph& g, const CategoryEvaluator& evaluator,
                                   int exact_limit = 12, std::size_t mc_samples = 500,
                                   std::uint64_t seed = 0);

}  // namespace lscat
