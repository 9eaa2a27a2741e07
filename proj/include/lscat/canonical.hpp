#ifndef LSCAT_CANONICAL_HPP
#define LSCAT_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lscat/graph.hpp"

namespace lscat {

// Exact canonical form: equal certificates iff isomorphic (as colored graphs
// when an initial partition is given). Computed by equitable refinement plus
// individualization with a best-leaf search; certificate is the minimal
// adjacency bitstring over the leaves of the invariant search tree.
struct CanonicalForm {
  // canonical index of the vertex at each position: canon_index[pos]
  std::vector<int> canon_index;
  // bytes: [order][packed upper-triangle bits of canonical adjacency]
  std::string certificate;
};

// initial_colors: optional color per position (smaller color = earlier cell).
CanonicalForm canonical_form(const SimpleGraph& g, const std::vector<int>* initial_colors = nullptr);

std::string canonical_certificate(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Explicit isomorphism a -> b (id map), if any.
std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace lscat

#endif
