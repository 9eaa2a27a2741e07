#include "lscat/graph.hpp"

#include <algorithm>
#include <bit>

namespace lscat {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxOrder) throw GraphError("graph order out of range: " + std::to_string(n));
  ids_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids_[static_cast<size_t>(i)] = i;
  adj_.assign(static_cast<size_t>(n), 0);
  init_edges(edges);
}

SimpleGraph::SimpleGraph(std::vector<int> vertex_ids, const std::vector<std::pair<int, int>>& edges)
    : ids_(std::move(vertex_ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw GraphError("duplicate vertex id");
  if (!ids_.empty() && ids_.front() < 0) throw GraphError("negative vertex id");
  if (ids_.size() > kMaxOrder) throw GraphError("graph order out of range: " + std::to_string(ids_.size()));
  adj_.assign(ids_.size(), 0);
  init_edges(edges);
}

void SimpleGraph::init_edges(const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges) {
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    int p = pos_of(u), q = pos_of(v);
    if (adj_[static_cast<size_t>(p)] >> q & 1)
      throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    add_edge_pos(p, q);
  }
}

void SimpleGraph::add_edge_pos(int p, int q) {
  adj_[static_cast<size_t>(p)] |= uint64_t{1} << q;
  adj_[static_cast<size_t>(q)] |= uint64_t{1} << p;
}

int SimpleGraph::size() const {
  int twice = 0;
  for (uint64_t m : adj_) twice += std::popcount(m);
  return twice / 2;
}

bool SimpleGraph::has_vertex(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

int SimpleGraph::pos_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw GraphError("unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids_.begin());
}

bool SimpleGraph::adjacent(int u, int v) const { return adjacent_pos(pos_of(u), pos_of(v)); }

int SimpleGraph::degree(int id) const {
  return std::popcount(adj_[static_cast<size_t>(pos_of(id))]);
}

std::vector<int> SimpleGraph::neighbors(int id) const {
  std::vector<int> out;
  uint64_t m = adj_[static_cast<size_t>(pos_of(id))];
  while (m) {
    int p = std::countr_zero(m);
    out.push_back(ids_[static_cast<size_t>(p)]);
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < order(); ++p) {
    uint64_t m = adj_[static_cast<size_t>(p)] >> (p + 1) << (p + 1);
    while (m) {
      int q = std::countr_zero(m);
      out.emplace_back(ids_[static_cast<size_t>(p)], ids_[static_cast<size_t>(q)]);
      m &= m - 1;
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced_mask(uint64_t mask) const {
  SimpleGraph g;
  std::vector<int> posmap(static_cast<size_t>(order()), -1);
  for (uint64_t m = mask; m;) {
    int p = std::countr_zero(m);
    posmap[static_cast<size_t>(p)] = static_cast<int>(g.ids_.size());
    g.ids_.push_back(ids_[static_cast<size_t>(p)]);
    m &= m - 1;
  }
  g.adj_.assign(g.ids_.size(), 0);
  for (uint64_t m = mask; m;) {
    int p = std::countr_zero(m);
    m &= m - 1;
    uint64_t nb = adj_[static_cast<size_t>(p)] & mask;
    while (nb) {
      int q = std::countr_zero(nb);
      nb &= nb - 1;
      if (q > p) g.add_edge_pos(posmap[static_cast<size_t>(p)], posmap[static_cast<size_t>(q)]);
    }
  }
  return g;
}

SimpleGraph SimpleGraph::induced(std::span<const int> subset) const {
  uint64_t mask = 0;
  for (int id : subset) mask |= uint64_t{1} << pos_of(id);
  return induced_mask(mask);
}

SimpleGraph SimpleGraph::sphere(int x) const {
  return induced_mask(adj_[static_cast<size_t>(pos_of(x))]);
}

SimpleGraph SimpleGraph::with_vertex_removed(int x) const {
  uint64_t all = order() == 64 ? ~uint64_t{0} : (uint64_t{1} << order()) - 1;
  return induced_mask(all & ~(uint64_t{1} << pos_of(x)));
}

SimpleGraph SimpleGraph::with_vertex_added(int id, std::span<const int> nbrs) const {
  if (has_vertex(id)) throw GraphError("vertex id already present: " + std::to_string(id));
  std::vector<int> vs = ids_;
  vs.push_back(id);
  auto es = edges();
  for (int u : nbrs) {
    if (!has_vertex(u)) throw GraphError("unknown vertex id " + std::to_string(u));
    es.emplace_back(id, u);
  }
  return SimpleGraph(std::move(vs), es);
}

SimpleGraph SimpleGraph::with_edge_added(int u, int v) const {
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  SimpleGraph g = *this;
  g.add_edge_pos(pos_of(u), pos_of(v));
  return g;
}

SimpleGraph SimpleGraph::with_edge_removed(int u, int v) const {
  SimpleGraph g = *this;
  int p = pos_of(u), q = pos_of(v);
  g.adj_[static_cast<size_t>(p)] &= ~(uint64_t{1} << q);
  g.adj_[static_cast<size_t>(q)] &= ~(uint64_t{1} << p);
  return g;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<std::vector<int>> out;
  uint64_t seen = 0;
  for (int s = 0; s < order(); ++s) {
    if ((seen >> s) & 1u) continue;
    uint64_t comp = uint64_t{1} << s, frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f;) {
        int p = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[static_cast<size_t>(p)];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> vs;
    while (comp) {
      int p = std::countr_zero(comp);
      comp &= comp - 1;
      vs.push_back(ids_[static_cast<size_t>(p)]);
    }
    out.push_back(std::move(vs));
  }
  return out;
}

bool SimpleGraph::is_connected() const {
  if (order() == 0) return false;
  return components().size() == 1;
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return SimpleGraph(n, es);
}

SimpleGraph SimpleGraph::discrete(int n) { return SimpleGraph(n); }

}  // namespace lscat
