#ifndef LSCAT_GRAPH_HPP
#define LSCAT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lscat {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite simple graph with stable integer vertex ids (not necessarily
// contiguous). Immutable value type: mutating operations return copies.
// Internally vertices are positions 0..n-1 with 64-bit adjacency masks,
// which caps the order at 64; plenty for the intended scale.
class SimpleGraph {
public:
  static constexpr int kMaxOrder = 64;

  SimpleGraph() = default;
  // Vertices 0..n-1.
  explicit SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges = {});
  SimpleGraph(std::vector<int> vertex_ids, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(ids_.size()); }
  int size() const;  // edge count
  const std::vector<int>& vertices() const { return ids_; }
  bool has_vertex(int id) const;
  bool adjacent(int u, int v) const;
  int degree(int id) const;
  std::vector<int> neighbors(int id) const;
  std::vector<std::pair<int, int>> edges() const;  // ascending pairs, lexicographic

  // Induced subgraph on a vertex subset; ids are preserved.
  SimpleGraph induced(std::span<const int> subset) const;
  // Unit sphere: subgraph induced on the neighbors of x.
  SimpleGraph sphere(int x) const;

  SimpleGraph with_vertex_removed(int x) const;
  SimpleGraph with_vertex_added(int id, std::span<const int> nbrs) const;
  SimpleGraph with_edge_added(int u, int v) const;
  SimpleGraph with_edge_removed(int u, int v) const;

  bool is_connected() const;
  std::vector<std::vector<int>> components() const;  // each sorted; sorted by min id

  bool operator==(const SimpleGraph& o) const { return ids_ == o.ids_ && adj_ == o.adj_; }

  // Position-level access for algorithms that work on one fixed graph.
  int pos_of(int id) const;  // throws GraphError if absent
  int id_at(int pos) const { return ids_[static_cast<size_t>(pos)]; }
  uint64_t adj_mask(int pos) const { return adj_[static_cast<size_t>(pos)]; }
  bool adjacent_pos(int p, int q) const { return (adj_[static_cast<size_t>(p)] >> q) & 1u; }
  SimpleGraph induced_mask(uint64_t mask) const;  // mask over positions

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);
  static SimpleGraph discrete(int n);

private:
  std::vector<int> ids_;       // sorted ascending, unique, >= 0
  std::vector<uint64_t> adj_;  // adjacency masks indexed by position

  void add_edge_pos(int p, int q);
  void init_edges(const std::vector<std::pair<int, int>>& edges);
};

}  // namespace lscat

#endif
