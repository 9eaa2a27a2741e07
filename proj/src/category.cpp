#include "lscat/category.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <unordered_set>

#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/morse.hpp"

namespace lscat {

using nlohmann::json;

namespace {

std::vector<std::pair<int, int>> effective_edges(const SimpleGraph& g, const CoverMember& m) {
  if (m.edges) {
    std::set<std::pair<int, int>> out;
    for (auto [u, v] : *m.edges) {
      if (u == v) throw GraphError("cover member edge is a loop");
      if (u > v) std::swap(u, v);
      out.insert({u, v});
    }
    return {out.begin(), out.end()};
  }
  return g.induced(m.vertices).edges();
}

}  // namespace

SimpleGraph member_graph(const SimpleGraph& g, const CoverMember& m) {
  std::vector<int> verts = m.vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) throw GraphError("cover member has no vertices");
  for (int v : verts)
    if (!g.has_vertex(v)) throw GraphError("cover member vertex " + std::to_string(v) + " not in graph");
  if (!m.edges) return g.induced(verts);
  for (auto [u, v] : *m.edges) {
    if (!std::binary_search(verts.begin(), verts.end(), u) ||
        !std::binary_search(verts.begin(), verts.end(), v))
      throw GraphError("cover member edge endpoint outside its vertex set");
    if (!g.adjacent(u, v))
      throw GraphError("cover member edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is not an edge of the graph");
  }
  return SimpleGraph(verts, effective_edges(g, m));
}

Cover cover_from_json(const std::string& text) {
  json j = json::parse(text);
  const json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.is_object() && j.contains("members") && j["members"].is_array())
    arr = &j["members"];
  else
    throw GraphError("cover JSON must be a list of members or {\"members\": [...]}");
  Cover c;
  for (const json& jm : *arr) {
    if (!jm.is_object() || !jm.contains("vertices"))
      throw GraphError("cover member must be an object with a \"vertices\" list");
    CoverMember m;
    for (const json& v : jm["vertices"]) m.vertices.push_back(v.get<int>());
    if (jm.contains("edges")) {
      std::vector<std::pair<int, int>> edges;
      for (const json& e : jm["edges"]) {
        if (!e.is_array() || e.size() != 2) throw GraphError("cover member edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      m.edges = std::move(edges);
    }
    c.members.push_back(std::move(m));
  }
  return c;
}

std::string cover_to_json(const Cover& c) {
  json members = json::array();
  for (const CoverMember& m : c.members) {
    json jm;
    jm["vertices"] = m.vertices;
    if (m.edges) {
      json edges = json::array();
      for (auto [u, v] : *m.edges) edges.push_back(json::array({u, v}));
      jm["edges"] = std::move(edges);
    }
    members.push_back(std::move(jm));
  }
  json out;
  out["members"] = std::move(members);
  return out.dump(2);
}

CoverVerification verify_cover(const SimpleGraph& g, const Cover& c, CoverMode mode,
                               const AmbientBudget& budget) {
  CoverVerification out;
  std::set<int> vcov;
  std::set<std::pair<int, int>> ecov;
  for (const CoverMember& m : c.members) {
    member_graph(g, m);  // validate
    for (int v : m.vertices) vcov.insert(v);
    for (auto e : effective_edges(g, m)) ecov.insert(e);
  }
  for (int v : g.vertices())
    if (!vcov.count(v)) out.uncovered_vertices.push_back(v);
  for (auto e : g.edges())
    if (!ecov.count(e)) out.uncovered_edges.push_back(e);
  out.coverage_ok = out.uncovered_vertices.empty() && out.uncovered_edges.empty();

  bool all_ok = true;
  for (const CoverMember& m : c.members) {
    MemberVerdict verdict;
    SimpleGraph mg = member_graph(g, m);
    if (is_contractible(mg)) {
      verdict.status = MemberStatus::ContractibleItself;
      verdict.message = "contractible in itself";
    } else if (mode == CoverMode::InItself) {
      verdict.status = MemberStatus::Failed;
      verdict.message = "member graph is not contractible in itself";
      all_ok = false;
    } else {
      switch (contractible_in(g, m.vertices, budget)) {
        case AmbientAnswer::Contractible:
          verdict.status = MemberStatus::ContractibleInG;
          verdict.message = "contractible within the ambient graph";
          break;
        case AmbientAnswer::NotContractible:
          verdict.status = MemberStatus::Failed;
          verdict.message = "not contractible within the ambient graph";
          all_ok = false;
          break;
        case AmbientAnswer::Unknown:
          verdict.status = MemberStatus::Unknown;
          verdict.message = "search budget exhausted; certificate inconclusive";
          out.unknown = true;
          all_ok = false;
          break;
      }
    }
    out.members.push_back(std::move(verdict));
  }
  out.ok = out.coverage_ok && all_ok;
  if (out.ok) out.bound = static_cast<int>(c.members.size());
  return out;
}

GcatResult gcat_exact(const SimpleGraph& g, int limit) {
  GcatResult res;
  const int n = g.order();
  if (n == 0) {
    res.exact = true;
    res.method = "empty";
    return res;
  }
  if (n > limit) {
    res.method = "refused: order exceeds gcat limit";
    return res;
  }
  auto edges = g.edges();
  const int ne = static_cast<int>(edges.size());
  if (n + ne > 64) {
    res.method = "refused: element universe too large";
    return res;
  }
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < ne; ++i) edge_index[edges[static_cast<std::size_t>(i)]] = n + i;

  struct Candidate {
    uint64_t verts = 0;  // position mask
    uint64_t cover = 0;  // element mask (vertices then edges)
  };
  std::vector<Candidate> cands;
  const uint64_t full_elems = (n + ne == 64) ? ~uint64_t{0} : ((uint64_t{1} << (n + ne)) - 1);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    SimpleGraph sub = g.induced_mask(mask);
    if (!is_contractible(sub)) continue;
    Candidate c;
    c.verts = mask;
    c.cover = mask;  // vertex elements share positions 0..n-1
    for (auto e : sub.edges()) c.cover |= uint64_t{1} << edge_index.at(e);
    cands.push_back(c);
  }
  // Keep only coverage-maximal candidates.
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return std::popcount(a.cover) > std::popcount(b.cover); });
  std::vector<Candidate> maximal;
  for (const Candidate& c : cands) {
    bool dominated = false;
    for (const Candidate& m : maximal)
      if ((c.cover & ~m.cover) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(c);
  }

  int best = n + ne + 1;
  std::vector<std::size_t> chosen, best_choice;
  std::size_t max_cover = maximal.empty() ? 1 : static_cast<std::size_t>(std::popcount(maximal[0].cover));

  std::function<void(uint64_t)> solve = [&](uint64_t covered) {
    if (covered == full_elems) {
      if (static_cast<int>(chosen.size()) < best) {
        best = static_cast<int>(chosen.size());
        best_choice = chosen;
      }
      return;
    }
    int remaining = std::popcount(full_elems & ~covered);
    int lb = static_cast<int>((static_cast<std::size_t>(remaining) + max_cover - 1) / max_cover);
    if (static_cast<int>(chosen.size()) + lb >= best) return;
    // Branch on the uncovered element with the fewest candidates.
    int pick_elem = -1;
    std::size_t fewest = maximal.size() + 1;
    for (int e = 0; e < n + ne; ++e) {
      if (covered & (uint64_t{1} << e)) continue;
      std::size_t cnt = 0;
      for (const Candidate& c : maximal)
        if (c.cover & (uint64_t{1} << e)) ++cnt;
      if (cnt < fewest) {
        fewest = cnt;
        pick_elem = e;
      }
    }
    if (pick_elem < 0 || fewest == 0) return;  // uncoverable element
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (!(maximal[i].cover & (uint64_t{1} << pick_elem))) continue;
      chosen.push_back(i);
      solve(covered | maximal[i].cover);
      chosen.pop_back();
    }
  };
  solve(0);

  if (best_choice.empty() && best > n + ne) {
    res.method = "no cover found";  // cannot happen: singletons are candidates
    return res;
  }
  res.value = best;
  res.exact = true;
  res.method = "exact set cover";
  Cover cover;
  for (std::size_t i : best_choice) {
    CoverMember m;
    for (int p = 0; p < n; ++p)
      if (maximal[i].verts & (uint64_t{1} << p)) m.vertices.push_back(g.id_at(p));
    cover.members.push_back(std::move(m));
  }
  res.cover = std::move(cover);
  return res;
}

namespace {

// Lower bound valid for tcat: per component, cup length, raised to 2 when
// the component is not contractible (a one-member cover means contractible).
int tcat_lower(const SimpleGraph& g, bool& used_noncontractible) {
  int total = 0;
  for (const auto& comp : g.components()) {
    SimpleGraph c = g.induced(comp);
    int lo = cup_length(c).lower;
    if (!is_contractible(c) && lo < 2) {
      lo = 2;
      used_noncontractible = true;
    }
    total += lo;
  }
  return total;
}

// Universal cover upper bound: one member per edge plus isolated vertices.
int edge_cover_upper(const SimpleGraph& g) {
  int isolated = 0;
  for (int v : g.vertices())
    if (g.degree(v) == 0) ++isolated;
  return g.size() + isolated;
}

// cat lower bound: cup per component (component count is a homotopy
// invariant and every cover member lies in one component).
int cat_lower(const SimpleGraph& g) {
  int total = 0;
  for (const auto& comp : g.components()) total += std::max(cup_length(g.induced(comp)).lower, 1);
  return total;
}

}  // namespace

CategoryBracket tcat_bracket(const SimpleGraph& g, const TcatOptions& opt) {
  CategoryBracket out;
  if (g.order() == 0) {
    out.lower_method = out.upper_method = "empty";
    return out;
  }
  bool raised = false;
  out.lower = tcat_lower(g, raised);
  out.lower_method = raised ? "cup+non-contractible" : "cup";

  out.upper = edge_cover_upper(g);
  out.upper_method = "edge-cover";
  for (const Cover& c : opt.covers) {
    CoverVerification v = verify_cover(g, c, CoverMode::InG, opt.ambient);
    if (v.ok && *v.bound < out.upper) {
      out.upper = *v.bound;
      out.upper_method = "cover-certificate";
    }
  }
  if (g.order() <= opt.gcat_limit) {
    GcatResult gc = gcat_exact(g, opt.gcat_limit);
    if (gc.exact && gc.value < out.upper) {
      out.upper = gc.value;
      out.upper_method = "gcat";
    }
  }
  if (g.order() <= opt.dp_limit) {
    CritResult cr = crit_exact(g, opt.dp_limit);
    if (cr.exact && cr.value < out.upper) {
      out.upper = cr.value;
      out.upper_method = "crit";
    }
  }
  return out;
}

namespace {

// Bounded exploration of the homotopy class: all four moves, order capped at
// max(|G|, |core|) + extra, breadth-first, deduplicated by canonical form.
std::vector<SimpleGraph> class_representatives(const SimpleGraph& g, const ClassSearchOptions& opt) {
  std::vector<SimpleGraph> reps;
  std::unordered_set<std::string> seen;
  std::deque<SimpleGraph> queue;
  auto visit = [&](const SimpleGraph& h) {
    if (seen.size() >= opt.max_states) return;
    std::string key = canonical_certificate(h);
    if (seen.insert(key).second) {
      reps.push_back(h);
      queue.push_back(h);
    }
  };
  visit(g);
  Reduction red = reduce(g);
  visit(red.core);
  const int cap = std::max(g.order(), red.core.order()) + opt.max_extra_vertices;
  while (!queue.empty() && seen.size() < opt.max_states) {
    SimpleGraph cur = queue.front();
    queue.pop_front();
    for (int x : removable_vertices(cur))
      if (cur.order() > 1) visit(cur.with_vertex_removed(x));
    auto verts = cur.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        Move m;
        m.edge = {verts[i], verts[j]};
        m.type = cur.adjacent(verts[i], verts[j]) ? MoveType::RemoveEdge : MoveType::AddEdge;
        if (move_legal(cur, m)) visit(apply_move(cur, m));
      }
    if (cur.order() < cap) {
      int fresh = verts.empty() ? 0 : verts.back() + 1;
      for (uint64_t base : contractible_base_masks(cur, 4096)) {
        std::vector<int> nbrs;
        for (int p = 0; p < cur.order(); ++p)
          if (base & (uint64_t{1} << p)) nbrs.push_back(cur.id_at(p));
        visit(cur.with_vertex_added(fresh, nbrs));
      }
    }
  }
  return reps;
}

}  // namespace

CategoryBracket cat_bracket(const SimpleGraph& g, const ClassSearchOptions& opt) {
  CategoryBracket out;
  if (g.order() == 0) {
    out.lower_method = out.upper_method = "empty";
    return out;
  }
  out.lower = cat_lower(g);
  out.lower_method = "cup";
  out.upper = edge_cover_upper(g);
  out.upper_method = "edge-cover";
  TcatOptions base = opt.tcat;
  for (const SimpleGraph& rep : class_representatives(g, opt)) {
    TcatOptions ropt = base;
    if (!(rep == g)) {
      ropt.covers.clear();  // user covers refer to g's vertex ids only
      ropt.dp_limit = std::min(ropt.dp_limit, opt.rep_dp_limit);
      ropt.gcat_limit = std::min(ropt.gcat_limit, opt.rep_gcat_limit);
    }
    CategoryBracket t = tcat_bracket(rep, ropt);
    if (t.upper < out.upper) {
      out.upper = t.upper;
      out.upper_method = t.upper_method + " (representative)";
    }
    if (out.upper <= out.lower) break;
  }
  return out;
}

CategoryBracket cri_bracket(const SimpleGraph& g, const ClassSearchOptions& opt) {
  CategoryBracket out;
  if (g.order() == 0) {
    out.lower_method = out.upper_method = "empty";
    return out;
  }
  out.lower = cat_lower(g);
  out.lower_method = "cup";
  out.upper = g.order();
  out.upper_method = "vertex-count";
  for (const SimpleGraph& rep : class_representatives(g, opt)) {
    int lim = (rep == g) ? opt.tcat.dp_limit : opt.rep_dp_limit;
    if (rep.order() > lim) continue;
    CritResult cr = crit_exact(rep, lim);
    if (cr.exact && cr.value < out.upper) {
      out.upper = cr.value;
      out.upper_method = "crit (representative)";
    }
    if (out.upper <= out.lower) break;
  }
  return out;
}

Cover normalize_cover(const SimpleGraph& g, const Cover& c, const std::vector<int>& h) {
  SimpleGraph hg = g.induced(h);
  Cover out;
  for (const CoverMember& m : c.members) {
    bool meets = false;
    for (int v : m.vertices)
      if (std::find(h.begin(), h.end(), v) != h.end()) {
        meets = true;
        break;
      }
    if (!meets) {
      out.members.push_back(m);
      continue;
    }
    CoverMember nm;
    std::set<int> verts(m.vertices.begin(), m.vertices.end());
    verts.insert(h.begin(), h.end());
    nm.vertices.assign(verts.begin(), verts.end());
    std::set<std::pair<int, int>> edges;
    for (auto e : effective_edges(g, m)) edges.insert(e);
    for (auto e : hg.edges()) edges.insert(e);
    nm.edges = std::vector<std::pair<int, int>>(edges.begin(), edges.end());
    out.members.push_back(std::move(nm));
  }
  return out;
}

CategoryBracket evaluate_cat(const SimpleGraph& g) {
  CategoryBracket out;
  if (g.order() == 0) {
    out.lower_method = out.upper_method = "empty";
    return out;
  }
  SimpleGraph core = reduce(g).core;
  int total = 0;
  bool resolved = true;
  for (const auto& comp : core.components()) {
    if (comp.size() == 1) {
      total += 1;
      continue;
    }
    SimpleGraph c = core.induced(comp);
    bool cyc = c.order() >= 4;
    for (int v : c.vertices())
      if (c.degree(v) != 2) cyc = false;
    if (cyc && c.is_connected()) {
      total += 2;
      continue;
    }
    resolved = false;
    break;
  }
  if (resolved) {
    out.lower = out.upper = total;
    out.lower_method = out.upper_method = "reduction";
    return out;
  }
  out.lower = cat_lower(g);
  out.lower_method = "cup";
  out.upper = edge_cover_upper(g);
  out.upper_method = "edge-cover";
  if (g.order() <= 8) {
    GcatResult gc = gcat_exact(g, 8);
    if (gc.exact && gc.value < out.upper) {
      out.upper = gc.value;
      out.upper_method = "gcat";
    }
  }
  if (g.order() <= 16) {
    CritResult cr = crit_exact(g, 16);
    if (cr.exact && cr.value < out.upper) {
      out.upper = cr.value;
      out.upper_method = "crit";
    }
  }
  return out;
}

CategoryEvaluator default_category_evaluator() {
  return [](const SimpleGraph& g) { return evaluate_cat(g); };
}

}  // namespace lscat
