#ifndef LSCAT_CLIQUE_HPP
#define LSCAT_CLIQUE_HPP

#include <map>
#include <vector>

#include "lscat/graph.hpp"

namespace lscat {

// Simplex = clique, kept as ascending vertex ids.
using Simplex = std::vector<int>;

// Flag complex of a graph: stratum k holds the (k+1)-cliques, so dimension is
// 0-based (strata[0] = vertices). Built by ordered extension: a clique is
// grown only by common neighbors with larger position, so each clique is
// produced exactly once, in ascending order.
class CliqueComplex {
public:
  explicit CliqueComplex(const SimpleGraph& g, int max_dim = -1);

  int dim() const { return static_cast<int>(strata_.size()) - 1; }
  const std::vector<Simplex>& stratum(int k) const { return strata_[static_cast<size_t>(k)]; }
  std::vector<int> f_vector() const;
  long long euler_characteristic() const;
  // Row index of a simplex within its stratum; -1 if absent.
  int index_of(const Simplex& s) const;
  const SimpleGraph& graph() const { return g_; }

private:
  SimpleGraph g_;
  std::vector<std::vector<Simplex>> strata_;
  std::vector<std::map<Simplex, int>> index_;
};

// Alternating clique-count sum without storing the complex.
long long euler_characteristic(const SimpleGraph& g);

}  // namespace lscat

#endif
