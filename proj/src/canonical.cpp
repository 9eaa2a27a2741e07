#include "lscat/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace lscat {
namespace {

// Ordered partition of positions into cells; cell order is significant.
struct Partition {
  std::vector<std::vector<int>> cells;

  bool discrete() const {
    for (const auto& c : cells)
      if (c.size() > 1) return false;
    return true;
  }
};

// Equitable refinement: repeatedly split cells by neighbor counts into every
// current cell. New cells are ordered by (parent cell, count signature), which
// keeps the process isomorphism-invariant.
Partition refine(const SimpleGraph& g, Partition p) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint64_t> cell_masks;
    cell_masks.reserve(p.cells.size());
    for (const auto& c : p.cells) {
      uint64_t m = 0;
      for (int v : c) m |= uint64_t{1} << v;
      cell_masks.push_back(m);
    }
    Partition q;
    for (const auto& cell : p.cells) {
      if (cell.size() == 1) {
        q.cells.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> sig;
        sig.reserve(cell_masks.size());
        for (uint64_t cm : cell_masks) sig.push_back(std::popcount(g.adj_mask(v) & cm));
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, vs] : split) q.cells.push_back(std::move(vs));
    }
    p = std::move(q);
    if (n == 0) break;
  }
  return p;
}

std::string leaf_certificate(const SimpleGraph& g, const Partition& p, const std::vector<int>* colors,
                             std::vector<int>& canon_index) {
  const int n = g.order();
  canon_index.assign(static_cast<size_t>(n), 0);
  std::vector<int> order(static_cast<size_t>(n));
  int k = 0;
  for (const auto& c : p.cells)
    for (int v : c) {
      order[static_cast<size_t>(k)] = v;
      canon_index[static_cast<size_t>(v)] = k++;
    }
  std::string cert;
  cert.push_back(static_cast<char>(n));
  int bits = 0, acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.adjacent_pos(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]) ? 1 : 0);
      if (++bits == 8) {
        cert.push_back(static_cast<char>(acc));
        bits = 0;
        acc = 0;
      }
    }
  if (bits) cert.push_back(static_cast<char>(acc << (8 - bits)));
  if (colors)
    for (int i = 0; i < n; ++i)
      cert.push_back(static_cast<char>((*colors)[static_cast<size_t>(order[static_cast<size_t>(i)])]));
  return cert;
}

struct Search {
  const SimpleGraph& g;
  const std::vector<int>* colors;
  std::string best;
  std::vector<int> best_index;

  // True if every other cell is a singleton and the target cell induces a
  // complete or empty subgraph: then its vertices are interchangeable by an
  // automorphism and one branch suffices.
  bool cell_uniform(const Partition& p, size_t target) const {
    for (size_t i = 0; i < p.cells.size(); ++i)
      if (i != target && p.cells[i].size() > 1) return false;
    const auto& cell = p.cells[target];
    bool complete = true, empty = true;
    for (size_t a = 0; a < cell.size() && (complete || empty); ++a)
      for (size_t b = a + 1; b < cell.size(); ++b) {
        if (g.adjacent_pos(cell[a], cell[b])) empty = false;
        else complete = false;
      }
    return complete || empty;
  }

  void run(Partition p) {
    p = refine(g, p);
    if (p.discrete()) {
      std::vector<int> idx;
      std::string cert = leaf_certificate(g, p, colors, idx);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_index = std::move(idx);
      }
      return;
    }
    size_t target = 0;
    while (p.cells[target].size() == 1) ++target;
    bool uniform = cell_uniform(p, target);
    for (int v : p.cells[target]) {
      Partition q;
      q.cells.reserve(p.cells.size() + 1);
      for (size_t i = 0; i < p.cells.size(); ++i) {
        if (i == target) {
          q.cells.push_back({v});
          std::vector<int> rest;
          for (int w : p.cells[i])
            if (w != v) rest.push_back(w);
          q.cells.push_back(std::move(rest));
        } else {
          q.cells.push_back(p.cells[i]);
        }
      }
      run(std::move(q));
      if (uniform) break;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g, const std::vector<int>* initial_colors) {
  const int n = g.order();
  Partition p;
  if (initial_colors) {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[(*initial_colors)[static_cast<size_t>(v)]].push_back(v);
    for (auto& [c, vs] : by_color) p.cells.push_back(std::move(vs));
  } else if (n > 0) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    p.cells.push_back(std::move(all));
  }
  Search s{g, initial_colors, {}, {}};
  if (n == 0) {
    s.best.push_back(0);
  } else {
    s.run(std::move(p));
  }
  return CanonicalForm{std::move(s.best_index), std::move(s.best)};
}

std::string canonical_certificate(const SimpleGraph& g) { return canonical_form(g).certificate; }

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  CanonicalForm ca = canonical_form(a), cb = canonical_form(b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  // canon_index maps positions to canonical slots; compose a -> slot -> b.
  std::vector<int> slot_to_bpos(static_cast<size_t>(b.order()));
  for (int p = 0; p < b.order(); ++p) slot_to_bpos[static_cast<size_t>(cb.canon_index[static_cast<size_t>(p)])] = p;
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(a.order()));
  for (int p = 0; p < a.order(); ++p) {
    int bp = slot_to_bpos[static_cast<size_t>(ca.canon_index[static_cast<size_t>(p)])];
    out.emplace_back(a.id_at(p), b.id_at(bp));
  }
  return out;
}

}  // namespace lscat
