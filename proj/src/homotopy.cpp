#include "lscat/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/io.hpp"

namespace lscat {

std::string move_name(MoveType t) {
  switch (t) {
    case MoveType::RemoveVertex: return "remove_vertex";
    case MoveType::AddVertex: return "add_vertex";
    case MoveType::AddEdge: return "add_edge";
    case MoveType::RemoveEdge: return "remove_edge";
  }
  return "?";
}

ContractibilityCache& ContractibilityCache::instance() {
  static ContractibilityCache cache;
  return cache;
}

std::optional<bool> ContractibilityCache::lookup(const std::string& key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ContractibilityCache::store(const std::string& key, bool value) {
  std::unique_lock lock(mu_);
  map_.emplace(key, value);
}

std::size_t ContractibilityCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

namespace {

// Collapse candidates: dominated vertices first (their spheres are cones,
// hence removable, and removing them rarely loses a collapse), then by
// ascending degree.
std::vector<int> candidate_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> dominated(static_cast<size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    uint64_t closed = g.adj_mask(p) | (uint64_t{1} << p);
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      uint64_t closed_q = g.adj_mask(q) | (uint64_t{1} << q);
      if ((closed & ~closed_q) == 0) {
        dominated[static_cast<size_t>(p)] = 1;
        break;
      }
    }
  }
  std::vector<int> pos(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) pos[static_cast<size_t>(p)] = p;
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    if (dominated[static_cast<size_t>(a)] != dominated[static_cast<size_t>(b)])
      return dominated[static_cast<size_t>(a)] > dominated[static_cast<size_t>(b)];
    int da = g.degree(g.id_at(a)), db = g.degree(g.id_at(b));
    if (da != db) return da < db;
    return a < b;
  });
  return pos;
}

bool contractible_rec(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.size() == 1;
  if (!g.is_connected()) return false;
  if (euler_characteristic(g) != 1) return false;
  auto& cache = ContractibilityCache::instance();
  std::string key = canonical_certificate(g);
  if (auto hit = cache.lookup(key)) return *hit;
  bool result = false;
  for (int p : candidate_order(g)) {
    int x = g.id_at(p);
    if (!contractible_rec(g.sphere(x))) continue;
    if (contractible_rec(g.with_vertex_removed(x))) {
      result = true;
      break;
    }
  }
  cache.store(key, result);
  return result;
}

bool collapse_rec(const SimpleGraph& g, std::vector<int>& order) {
  const int n = g.order();
  if (n == 1) return true;
  if (!contractible_rec(g)) return false;
  for (int p : candidate_order(g)) {
    int x = g.id_at(p);
    if (!contractible_rec(g.sphere(x))) continue;
    order.push_back(x);
    if (collapse_rec(g.with_vertex_removed(x), order)) return true;
    order.pop_back();
  }
  return false;
}

SimpleGraph common_neighbor_graph(const SimpleGraph& g, int u, int v) {
  uint64_t m = g.adj_mask(g.pos_of(u)) & g.adj_mask(g.pos_of(v));
  return g.induced_mask(m);
}

int fresh_id(const SimpleGraph& g) {
  int m = -1;
  for (int v : g.vertices()) m = std::max(m, v);
  return m + 1;
}

}  // namespace

bool is_contractible(const SimpleGraph& g) { return contractible_rec(g); }

std::optional<std::vector<int>> collapse_order(const SimpleGraph& g) {
  if (g.order() == 0) return std::nullopt;
  std::vector<int> order;
  if (!collapse_rec(g, order)) return std::nullopt;
  return order;
}

std::vector<int> removable_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (is_contractible(g.sphere(v))) out.push_back(v);
  return out;
}

bool move_legal(const SimpleGraph& g, const Move& m, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (m.type) {
    case MoveType::RemoveVertex: {
      if (!g.has_vertex(m.vertex)) return fail("vertex not present");
      if (!is_contractible(g.sphere(m.vertex))) return fail("sphere of vertex is not contractible");
      return true;
    }
    case MoveType::AddVertex: {
      if (m.vertex < 0) return fail("vertex id must be non-negative");
      if (g.has_vertex(m.vertex)) return fail("vertex id already present");
      if (g.order() + 1 > SimpleGraph::kMaxOrder) return fail("graph order limit exceeded");
      if (m.base.empty()) return fail("attachment set is empty");
      for (int b : m.base)
        if (!g.has_vertex(b)) return fail("attachment set contains missing vertex");
      std::vector<int> base = m.base;
      std::sort(base.begin(), base.end());
      if (std::adjacent_find(base.begin(), base.end()) != base.end())
        return fail("attachment set contains duplicates");
      if (!is_contractible(g.induced(base))) return fail("attachment set does not induce a contractible graph");
      return true;
    }
    case MoveType::AddEdge: {
      auto [u, v] = m.edge;
      if (!g.has_vertex(u) || !g.has_vertex(v)) return fail("edge endpoint not present");
      if (u == v) return fail("loops are not allowed");
      if (g.adjacent(u, v)) return fail("edge already present");
      if (!is_contractible(common_neighbor_graph(g, u, v)))
        return fail("common neighbors of endpoints do not induce a contractible graph");
      return true;
    }
    case MoveType::RemoveEdge: {
      auto [u, v] = m.edge;
      if (!g.has_vertex(u) || !g.has_vertex(v)) return fail("edge endpoint not present");
      if (u == v || !g.adjacent(u, v)) return fail("edge not present");
      if (!is_contractible(common_neighbor_graph(g, u, v)))
        return fail("common neighbors of endpoints do not induce a contractible graph");
      return true;
    }
  }
  return fail("unknown move type");
}

SimpleGraph apply_move(const SimpleGraph& g, const Move& m) {
  std::string why;
  if (!move_legal(g, m, &why)) throw GraphError("illegal move " + move_name(m.type) + ": " + why);
  switch (m.type) {
    case MoveType::RemoveVertex: return g.with_vertex_removed(m.vertex);
    case MoveType::AddVertex: return g.with_vertex_added(m.vertex, m.base);
    case MoveType::AddEdge: return g.with_edge_added(m.edge.first, m.edge.second);
    case MoveType::RemoveEdge: return g.with_edge_removed(m.edge.first, m.edge.second);
  }
  throw GraphError("unknown move type");
}

VerifyOutcome verify_certificate(const SimpleGraph& start, const Certificate& cert,
                                 const std::optional<std::vector<int>>& track) {
  VerifyOutcome out;
  out.final_graph = start;
  std::vector<int> marked;
  if (track) {
    for (int v : *track) {
      if (!start.has_vertex(v)) {
        out.message = "tracked vertex " + std::to_string(v) + " not in start graph";
        return out;
      }
      marked.push_back(v);
    }
  }
  SimpleGraph g = start;
  for (size_t i = 0; i < cert.moves.size(); ++i) {
    const Move& m = cert.moves[i];
    std::string why;
    if (!move_legal(g, m, &why)) {
      out.message = "move " + std::to_string(i) + " (" + move_name(m.type) + ") illegal: " + why;
      out.final_graph = g;
      if (track) out.track = marked;
      return out;
    }
    bool was_marked =
        m.type == MoveType::RemoveVertex &&
        std::find(marked.begin(), marked.end(), m.vertex) != marked.end();
    std::vector<int> sphere;
    if (was_marked) sphere = g.neighbors(m.vertex);
    g = apply_move(g, m);
    if (was_marked) {
      // The retraction slides the removed vertex into its sphere; track the
      // union over neighbour choices, a sound over-approximation of the image.
      marked.erase(std::remove(marked.begin(), marked.end(), m.vertex), marked.end());
      for (int nb : sphere)
        if (std::find(marked.begin(), marked.end(), nb) == marked.end()) marked.push_back(nb);
      std::sort(marked.begin(), marked.end());
    }
  }
  out.ok = true;
  out.message = "ok";
  out.final_graph = g;
  if (track) out.track = marked;
  return out;
}

Reduction reduce(const SimpleGraph& g) {
  Reduction r{g, {}};
  while (true) {
    std::vector<int> removable = removable_vertices(r.core);
    if (removable.empty()) break;
    int best = -1;
    std::string best_cert;
    for (int x : removable) {
      std::string cert = canonical_certificate(r.core.with_vertex_removed(x));
      if (best < 0 || cert < best_cert || (cert == best_cert && x < best)) {
        best = x;
        best_cert = cert;
      }
    }
    r.cert.moves.push_back(Move{MoveType::RemoveVertex, best, {-1, -1}, {}});
    r.core = r.core.with_vertex_removed(best);
  }
  return r;
}

AmbientAnswer contractible_in(const SimpleGraph& g, const std::vector<int>& sub,
                              const AmbientBudget& budget) {
  if (sub.empty()) throw GraphError("contractible_in: empty vertex set");
  for (int v : sub)
    if (!g.has_vertex(v)) throw GraphError("contractible_in: vertex not in graph");
  std::vector<int> s = sub;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() == 1) return AmbientAnswer::Contractible;
  if (is_contractible(g.induced(s))) return AmbientAnswer::Contractible;

  // Search over removal moves of the ambient graph, tracking the image of the
  // marked set. Removing a marked vertex slides its image to a neighbour (the
  // retraction maps it into its contractible sphere); the neighbour choice is
  // branched over. Success when the image shrinks to one vertex. The image
  // can never cross component boundaries, so marked sets spanning several
  // components are correctly rejected.
  struct State {
    SimpleGraph g;
    std::vector<int> marked;
  };
  auto state_key = [](const State& st) {
    std::vector<int> colors(static_cast<size_t>(st.g.order()), 0);
    for (int v : st.marked) colors[static_cast<size_t>(st.g.pos_of(v))] = 1;
    return canonical_form(st.g, &colors).certificate;
  };
  auto push_unique = [](std::vector<int>& vec, int v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it == vec.end() || *it != v) vec.insert(it, v);
  };
  std::deque<State> queue;
  std::unordered_set<std::string> seen;
  State init{g, s};
  seen.insert(state_key(init));
  queue.push_back(std::move(init));
  std::size_t expanded = 0;
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (++expanded > budget.max_states) return AmbientAnswer::Unknown;
    for (int x : removable_vertices(st.g)) {
      bool in_marked = std::binary_search(st.marked.begin(), st.marked.end(), x);
      SimpleGraph gnext = st.g.with_vertex_removed(x);
      if (!in_marked) {
        State next{gnext, st.marked};
        std::string key = state_key(next);
        if (seen.insert(key).second) queue.push_back(std::move(next));
        continue;
      }
      std::vector<int> rest = st.marked;
      rest.erase(std::remove(rest.begin(), rest.end(), x), rest.end());
      for (int nb : st.g.neighbors(x)) {
        State next{gnext, rest};
        push_unique(next.marked, nb);
        if (next.marked.size() == 1) return AmbientAnswer::Contractible;
        std::string key = state_key(next);
        if (seen.insert(key).second) queue.push_back(std::move(next));
      }
    }
  }
  return AmbientAnswer::NotContractible;
}

// All non-empty connected induced subsets whose induced graph is contractible,
// as position masks. Used to enumerate AddVertex moves.
std::vector<uint64_t> contractible_base_masks(const SimpleGraph& g, std::size_t cap) {
  const int n = g.order();
  std::vector<uint64_t> out;
  if (n == 0 || n > 22) return out;
  std::unordered_set<uint64_t> seen;
  std::deque<uint64_t> queue;
  for (int p = 0; p < n; ++p) {
    uint64_t m = uint64_t{1} << p;
    seen.insert(m);
    queue.push_back(m);
  }
  while (!queue.empty()) {
    uint64_t m = queue.front();
    queue.pop_front();
    if (seen.size() > cap) break;
    out.push_back(m);
    uint64_t frontier = 0;
    for (int p = 0; p < n; ++p)
      if (m & (uint64_t{1} << p)) frontier |= g.adj_mask(p);
    frontier &= ~m;
    for (int p = 0; p < n; ++p)
      if (frontier & (uint64_t{1} << p)) {
        uint64_t nm = m | (uint64_t{1} << p);
        if (seen.insert(nm).second) queue.push_back(nm);
      }
  }
  std::vector<uint64_t> good;
  for (uint64_t m : out)
    if (is_contractible(g.induced_mask(m))) good.push_back(m);
  std::sort(good.begin(), good.end());
  return good;
}

namespace {

struct SearchNode {
  SimpleGraph rep;
  int parent = -1;
  Move move;
  int extra = 0;
};

struct SearchSide {
  std::vector<SearchNode> nodes;
  std::unordered_map<std::string, int> seen;
  std::deque<int> frontier;
};

// Walk child -> parent collecting moves that undo the recorded path, i.e.
// moves carrying nodes[idx].rep back to nodes[0].rep.
std::vector<Move> inverse_path(const SearchSide& side, int idx) {
  std::vector<Move> out;
  while (idx > 0) {
    const SearchNode& node = side.nodes[static_cast<size_t>(idx)];
    const SimpleGraph& parent = side.nodes[static_cast<size_t>(node.parent)].rep;
    const Move& m = node.move;
    switch (m.type) {
      case MoveType::RemoveVertex: {
        std::vector<int> base;
        for (int w : parent.neighbors(m.vertex)) base.push_back(w);
        out.push_back(Move{MoveType::AddVertex, m.vertex, {-1, -1}, std::move(base)});
        break;
      }
      case MoveType::AddVertex:
        out.push_back(Move{MoveType::RemoveVertex, m.vertex, {-1, -1}, {}});
        break;
      case MoveType::AddEdge:
        out.push_back(Move{MoveType::RemoveEdge, -1, m.edge, {}});
        break;
      case MoveType::RemoveEdge:
        out.push_back(Move{MoveType::AddEdge, -1, m.edge, {}});
        break;
    }
    idx = node.parent;
  }
  return out;
}

std::vector<Move> forward_path(const SearchSide& side, int idx) {
  std::vector<Move> out;
  while (idx > 0) {
    out.push_back(side.nodes[static_cast<size_t>(idx)].move);
    idx = side.nodes[static_cast<size_t>(idx)].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Replay moves expressed in foreign ids on `cur`, translating through `psi`
// (foreign id -> local id) and minting fresh local ids for additions.
void append_transported(Certificate& cert, SimpleGraph& cur, const std::vector<Move>& moves,
                        std::unordered_map<int, int>& psi, int& fresh) {
  for (const Move& m : moves) {
    switch (m.type) {
      case MoveType::RemoveVertex: {
        Move mm{MoveType::RemoveVertex, psi.at(m.vertex), {-1, -1}, {}};
        cur = apply_move(cur, mm);
        psi.erase(m.vertex);
        cert.moves.push_back(std::move(mm));
        break;
      }
      case MoveType::AddVertex: {
        std::vector<int> base;
        base.reserve(m.base.size());
        for (int b : m.base) base.push_back(psi.at(b));
        int id = fresh++;
        Move mm{MoveType::AddVertex, id, {-1, -1}, std::move(base)};
        cur = apply_move(cur, mm);
        psi[m.vertex] = id;
        cert.moves.push_back(std::move(mm));
        break;
      }
      case MoveType::AddEdge:
      case MoveType::RemoveEdge: {
        Move mm{m.type, -1, {psi.at(m.edge.first), psi.at(m.edge.second)}, {}};
        cur = apply_move(cur, mm);
        cert.moves.push_back(std::move(mm));
        break;
      }
    }
  }
}

int max_id_in_cert(const SimpleGraph& g, const Certificate& c) {
  int m = -1;
  for (int v : g.vertices()) m = std::max(m, v);
  for (const Move& mv : c.moves) m = std::max({m, mv.vertex, mv.edge.first, mv.edge.second});
  return m;
}

}  // namespace

HomotopyResult homotopic_bounded(const SimpleGraph& a, const SimpleGraph& b, const HomotopyBudget& budget) {
  HomotopyResult res;
  if (a.order() == 0 || b.order() == 0) {
    res.answer = (a.order() == b.order()) ? HomotopyAnswer::Equivalent : HomotopyAnswer::Distinct;
    if (res.answer == HomotopyAnswer::Equivalent) res.certificate = Certificate{};
    res.detail = "empty graph";
    return res;
  }

  // Moves preserve the homotopy type of the clique complex, so cohomology
  // separates classes soundly.
  std::vector<int> ba = betti_numbers(a), bb = betti_numbers(b);
  size_t dim = std::max(ba.size(), bb.size());
  ba.resize(dim, 0);
  bb.resize(dim, 0);
  if (ba != bb) {
    res.answer = HomotopyAnswer::Distinct;
    std::ostringstream os;
    os << "betti numbers differ:";
    for (size_t k = 0; k < dim; ++k) os << " b" << k << "=" << ba[k] << "/" << bb[k];
    res.detail = os.str();
    return res;
  }

  Reduction ra = reduce(a), rb = reduce(b);

  Certificate cert = ra.cert;
  SimpleGraph cur = ra.core;

  auto finish_via = [&](const SimpleGraph& reached, const SimpleGraph& b_side_graph,
                        const std::vector<Move>& b_side_back) -> bool {
    auto iso = find_isomorphism(b_side_graph, reached);
    if (!iso) return false;
    int fresh = std::max({max_id_in_cert(cur, cert), max_id_in_cert(b, rb.cert), fresh_id(a) - 1}) + 1;
    std::unordered_map<int, int> psi;
    for (auto [bv, av] : *iso) psi[bv] = av;
    append_transported(cert, cur, b_side_back, psi, fresh);
    // Undo the b-side reduction: walk its removals backward as additions.
    std::vector<Move> undo;
    SimpleGraph gb = b;
    std::vector<SimpleGraph> stages{gb};
    for (const Move& m : rb.cert.moves) {
      gb = apply_move(gb, m);
      stages.push_back(gb);
    }
    for (size_t i = rb.cert.moves.size(); i-- > 0;) {
      const Move& m = rb.cert.moves[i];
      std::vector<int> base;
      for (int w : stages[i].neighbors(m.vertex)) base.push_back(w);
      undo.push_back(Move{MoveType::AddVertex, m.vertex, {-1, -1}, std::move(base)});
    }
    append_transported(cert, cur, undo, psi, fresh);
    return true;
  };

  if (finish_via(ra.core, rb.core, {})) {
    res.answer = HomotopyAnswer::Equivalent;
    res.certificate = cert;
    res.detail = "reductions meet";
    return res;
  }

  for (int extra = 0; extra <= budget.max_extra_vertices; ++extra) {
    SearchSide sa, sb;
    sa.nodes.push_back(SearchNode{ra.core, -1, {}, 0});
    sa.seen.emplace(canonical_certificate(ra.core), 0);
    sa.frontier.push_back(0);
    sb.nodes.push_back(SearchNode{rb.core, -1, {}, 0});
    sb.seen.emplace(canonical_certificate(rb.core), 0);
    sb.frontier.push_back(0);

    std::size_t states = 2;
    bool out_of_budget = false;
    int meet_a = -1, meet_b = -1;

    auto expand = [&](SearchSide& self, SearchSide& other, bool self_is_a, int start_order) -> bool {
      int idx = self.frontier.front();
      self.frontier.pop_front();
      SimpleGraph g = self.nodes[static_cast<size_t>(idx)].rep;
      std::vector<Move> moves;
      for (int x : removable_vertices(g))
        if (g.order() > 1) moves.push_back(Move{MoveType::RemoveVertex, x, {-1, -1}, {}});
      for (auto [u, v] : g.edges())
        if (move_legal(g, Move{MoveType::RemoveEdge, -1, {u, v}, {}}))
          moves.push_back(Move{MoveType::RemoveEdge, -1, {u, v}, {}});
      auto vs = g.vertices();
      for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
          if (g.adjacent(vs[i], vs[j])) continue;
          Move m{MoveType::AddEdge, -1, {vs[i], vs[j]}, {}};
          if (move_legal(g, m)) moves.push_back(m);
        }
      if (g.order() < start_order + extra && g.order() < SimpleGraph::kMaxOrder) {
        int id = fresh_id(g);
        for (uint64_t mask : contractible_base_masks(g, 200000)) {
          std::vector<int> base;
          for (int p = 0; p < g.order(); ++p)
            if (mask & (uint64_t{1} << p)) base.push_back(g.id_at(p));
          moves.push_back(Move{MoveType::AddVertex, id, {-1, -1}, std::move(base)});
        }
      }
      for (Move& m : moves) {
        SimpleGraph ng = apply_move(g, m);
        std::string key = canonical_certificate(ng);
        if (self.seen.count(key)) continue;
        if (++states > budget.max_states) {
          out_of_budget = true;
          return false;
        }
        int nidx = static_cast<int>(self.nodes.size());
        self.nodes.push_back(SearchNode{std::move(ng), idx, std::move(m), 0});
        self.seen.emplace(key, nidx);
        self.frontier.push_back(nidx);
        auto hit = other.seen.find(key);
        if (hit != other.seen.end()) {
          if (self_is_a) {
            meet_a = nidx;
            meet_b = hit->second;
          } else {
            meet_a = hit->second;
            meet_b = nidx;
          }
          return true;
        }
      }
      return false;
    };

    bool met = false;
    {
      auto hit = sb.seen.find(canonical_certificate(ra.core));
      if (hit != sb.seen.end()) {
        meet_a = 0;
        meet_b = hit->second;
        met = true;
      }
    }
    while (!met && (!sa.frontier.empty() || !sb.frontier.empty())) {
      bool pick_a;
      if (sa.frontier.empty()) pick_a = false;
      else if (sb.frontier.empty()) pick_a = true;
      else pick_a = sa.frontier.size() <= sb.frontier.size();
      met = pick_a ? expand(sa, sb, true, ra.core.order()) : expand(sb, sa, false, rb.core.order());
      if (out_of_budget) break;
    }

    if (met) {
      // Path: core_a -> meet (forward on a side), then meet -> core_b
      // (inverse of the b-side path), then undo b's reduction.
      for (const Move& m : forward_path(sa, meet_a)) {
        cur = apply_move(cur, m);
        cert.moves.push_back(m);
      }
      const SimpleGraph& reached = sa.nodes[static_cast<size_t>(meet_a)].rep;
      const SimpleGraph& b_meet = sb.nodes[static_cast<size_t>(meet_b)].rep;
      std::vector<Move> back = inverse_path(sb, meet_b);
      if (finish_via(reached, b_meet, back)) {
        res.answer = HomotopyAnswer::Equivalent;
        res.certificate = cert;
        std::ostringstream os;
        os << "search met after " << states << " states (extra vertices allowed: " << extra << ")";
        res.detail = os.str();
        return res;
      }
    }
    if (out_of_budget) {
      std::ostringstream os;
      os << "state budget " << budget.max_states << " exhausted at extra=" << extra;
      res.detail = os.str();
      res.answer = HomotopyAnswer::Unknown;
      return res;
    }
  }
  res.answer = HomotopyAnswer::Unknown;
  res.detail = "search space exhausted within vertex budget; no equivalence found";
  return res;
}

std::string certificate_to_json(const SimpleGraph& start, const Certificate& cert,
                                const std::optional<SimpleGraph>& end,
                                const std::optional<std::vector<int>>& track) {
  nlohmann::json j;
  j["format"] = "lscat-certificate";
  j["version"] = 1;
  j["start"] = nlohmann::json::parse(serialize_graph_json(start));
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& m : cert.moves) {
    nlohmann::json jm;
    jm["type"] = move_name(m.type);
    switch (m.type) {
      case MoveType::RemoveVertex: jm["vertex"] = m.vertex; break;
      case MoveType::AddVertex:
        jm["vertex"] = m.vertex;
        jm["base"] = m.base;
        break;
      case MoveType::AddEdge:
      case MoveType::RemoveEdge: jm["edge"] = {m.edge.first, m.edge.second}; break;
    }
    moves.push_back(std::move(jm));
  }
  j["moves"] = std::move(moves);
  if (end) j["end"] = nlohmann::json::parse(serialize_graph_json(*end));
  if (track) j["track"] = *track;
  return j.dump(2) + "\n";
}

CertificateFile certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: invalid json: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "lscat-certificate")
    throw ParseError("certificate: missing format tag");
  if (!j.contains("start")) throw ParseError("certificate: missing start graph");
  CertificateFile out{parse_graph_json(j["start"].dump()), {}, std::nullopt, std::nullopt};
  for (const auto& jm : j.value("moves", nlohmann::json::array())) {
    std::string type = jm.value("type", "");
    Move m;
    if (type == "remove_vertex") {
      m.type = MoveType::RemoveVertex;
      m.vertex = jm.at("vertex").get<int>();
    } else if (type == "add_vertex") {
      m.type = MoveType::AddVertex;
      m.vertex = jm.at("vertex").get<int>();
      m.base = jm.at("base").get<std::vector<int>>();
    } else if (type == "add_edge" || type == "remove_edge") {
      m.type = type == "add_edge" ? MoveType::AddEdge : MoveType::RemoveEdge;
      auto e = jm.at("edge").get<std::vector<int>>();
      if (e.size() != 2) throw ParseError("certificate: edge must have two endpoints");
      m.edge = {e[0], e[1]};
    } else {
      throw ParseError("certificate: unknown move type '" + type + "'");
    }
    out.cert.moves.push_back(std::move(m));
  }
  if (j.contains("end")) out.end = parse_graph_json(j["end"].dump());
  if (j.contains("track")) out.track = j["track"].get<std::vector<int>>();
  return out;
}

}  // namespace lscat
