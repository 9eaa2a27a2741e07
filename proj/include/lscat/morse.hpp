#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lscat/bracket.hpp"
#include "lscat/graph.hpp"

namespace lscat {

// Injective functions are given as orderings: ordering[j] is the vertex with
// the (j+1)-smallest value. Sublevel graphs are induced on a prefix.
SimpleGraph sublevel_graph(const SimpleGraph& g, const std::vector<int>& ordering, std::size_t count);

// S^-(x) relative to an ordering: neighbours of x that appear before x.
SimpleGraph minus_sphere(const SimpleGraph& g, const std::vector<int>& ordering, int x);

struct VertexIndexEntry {
  int vertex = -1;
  std::vector<int> sminus_fvector;  // f-vector of S^-(x)
  int index = 1;                    // i_f(x) = 1 - chi(S^-(x))
  bool critical = false;            // S^- empty or not contractible
  int sublevel_chi = 0;             // chi of the sublevel including x
};

struct IndexProfile {
  std::vector<VertexIndexEntry> entries;  // in ordering order
  int chi = 0;                            // chi(G); equals sum of indices
  bool prefix_sums_match = false;         // every prefix sum == sublevel chi
};

IndexProfile index_profile(const SimpleGraph& g, const std::vector<int>& ordering);
std::vector<int> critical_points(const SimpleGraph& g, const std::vector<int>& ordering);

struct CritResult {
  int value = 0;
  bool exact = false;
  std::vector<int> witness;  // ordering achieving the value
  std::string method;
};

// Minimal number of critical points over all injective functions, by dynamic
// programming over vertex subsets. Refuses graphs larger than dp_limit.
CritResult crit_exact(const SimpleGraph& g, int dp_limit = 22);

// Greedy upper bound with random restarts; never claimed exact.
CritResult crit_heuristic(const SimpleGraph& g, std::uint64_t seed = 0, int restarts = 64);

struct MorseStep {
  VertexIndexEntry entry;
  std::vector<int> betti_before;
  std::vector<int> betti_after;
  int morse_index = -1;  // coordinate changed at a critical step
};

struct MorseReport {
  bool morse = false;
  std::string message;
  std::vector<int> c;  // critical-point count per Morse index
  std::vector<MorseStep> steps;
};

// f is Morse when every critical vertex changes exactly one Betti number by
// exactly one and i_f(x) = (-1)^m for the changed coordinate m.
MorseReport morse_check(const SimpleGraph& g, const std::vector<int>& ordering);

struct MorseInequalityReport {
  bool ok = false;  // all inequalities and the Euler identity hold
  std::vector<int> b;
  std::vector<int> c;
  std::vector<int> slack;  // alternating-sum slack per degree, >= 0 when ok
  bool euler_equal = false;
  std::string message;
};

// Strong Morse inequalities for a Morse ordering:
//   b_k - b_{k-1} + ... +- b_0  <=  c_k - c_{k-1} + ... +- c_0  for all k,
// with equality of the full alternating sums (Euler characteristic).
// Throws GraphError when the ordering is not Morse.
MorseInequalityReport morse_inequalities(const SimpleGraph& g, const std::vector<int>& ordering);

struct CategoryIndexEntry {
  int vertex = -1;
  int k_lower = 0;  // bracket for k_f(x) = cat(prefix with x) - cat(prefix before)
  int k_upper = 0;
};

struct CategoryIndexProfile {
  std::vector<CategoryIndexEntry> entries;
  CategoryBracket total;  // telescopes to cat(G) when every prefix is exact
  bool exact = false;
};

CategoryIndexProfile category_index_profile(const SimpleGraph& g, const std::vector<int>& ordering,
                                            const CategoryEvaluator& evaluator);

// Uniformly random injective ordering of the vertices.
std::vector<int> random_ordering(const SimpleGraph& g, std::uint64_t seed);

}  // namespace lscat
