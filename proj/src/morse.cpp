#include "lscat/morse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

namespace {

void check_ordering(const SimpleGraph& g, const std::vector<int>& ordering) {
  std::vector<int> s = ordering;
  std::sort(s.begin(), s.end());
  if (s != g.vertices()) throw GraphError("ordering must list every vertex exactly once");
}

}  // namespace

SimpleGraph sublevel_graph(const SimpleGraph& g, const std::vector<int>& ordering, std::size_t count) {
  if (count > ordering.size()) throw GraphError("sublevel prefix longer than ordering");
  std::vector<int> pre(ordering.begin(), ordering.begin() + static_cast<std::ptrdiff_t>(count));
  return g.induced(pre);
}

SimpleGraph minus_sphere(const SimpleGraph& g, const std::vector<int>& ordering, int x) {
  auto it = std::find(ordering.begin(), ordering.end(), x);
  if (it == ordering.end()) throw GraphError("vertex not in ordering");
  uint64_t before = 0;
  for (auto j = ordering.begin(); j != it; ++j) before |= uint64_t{1} << g.pos_of(*j);
  return g.induced_mask(g.adj_mask(g.pos_of(x)) & before);
}

IndexProfile index_profile(const SimpleGraph& g, const std::vector<int>& ordering) {
  check_ordering(g, ordering);
  IndexProfile out;
  out.chi = euler_characteristic(g);
  out.prefix_sums_match = true;
  uint64_t below = 0;
  int running = 0;
  for (int x : ordering) {
    int p = g.pos_of(x);
    SimpleGraph sm = g.induced_mask(g.adj_mask(p) & below);
    below |= uint64_t{1} << p;

    VertexIndexEntry e;
    e.vertex = x;
    e.sminus_fvector = CliqueComplex(sm).f_vector();
    e.index = 1 - euler_characteristic(sm);
    e.critical = sm.order() == 0 || !is_contractible(sm);
    running += e.index;
    e.sublevel_chi = euler_characteristic(g.induced_mask(below));
    if (e.sublevel_chi != running) out.prefix_sums_match = false;
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<int> critical_points(const SimpleGraph& g, const std::vector<int>& ordering) {
  std::vector<int> crit;
  for (const auto& e : index_profile(g, ordering).entries)
    if (e.critical) crit.push_back(e.vertex);
  return crit;
}

namespace {

// Cost of placing x on top of the prefix with position mask rest:
// 1 when S^-(x) = N(x) cap rest is empty or not contractible.
struct CostOracle {
  const SimpleGraph& g;
  std::vector<std::unordered_map<uint64_t, uint8_t>> memo;

  explicit CostOracle(const SimpleGraph& graph)
      : g(graph), memo(static_cast<std::size_t>(graph.order())) {}

  int operator()(int pos, uint64_t rest) {
    uint64_t m = g.adj_mask(pos) & rest;
    if (m == 0) return 1;
    auto& table = memo[static_cast<std::size_t>(pos)];
    auto it = table.find(m);
    if (it != table.end()) return it->second;
    uint8_t cost = is_contractible(g.induced_mask(m)) ? 0 : 1;
    table.emplace(m, cost);
    return cost;
  }
};

}  // namespace

CritResult crit_exact(const SimpleGraph& g, int dp_limit) {
  const int n = g.order();
  CritResult res;
  if (n == 0) throw GraphError("crit of the empty graph is undefined");
  if (n > dp_limit || n > 25) {
    res.method = "refused: order exceeds dp limit";
    return res;
  }
  CostOracle cost(g);
  const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  std::vector<uint8_t> dp(static_cast<std::size_t>(full) + 1, 0);
  for (uint64_t s = 1; s <= full; ++s) {
    uint8_t best = 255;
    for (uint64_t m = s; m;) {
      int p = std::countr_zero(m);
      m &= m - 1;
      uint64_t rest = s & ~(uint64_t{1} << p);
      uint8_t v = static_cast<uint8_t>(dp[rest] + cost(p, rest));
      if (v < best) best = v;
    }
    dp[s] = best;
  }
  res.value = dp[full];
  res.exact = true;
  res.method = "subset-dp";
  // Rebuild an optimal ordering back to front; smallest vertex id on ties.
  uint64_t s = full;
  std::vector<int> rev;
  while (s) {
    int pick = -1;
    for (uint64_t m = s; m;) {
      int p = std::countr_zero(m);
      m &= m - 1;
      uint64_t rest = s & ~(uint64_t{1} << p);
      if (dp[rest] + cost(p, rest) == dp[s]) {
        pick = p;
        break;  // positions scan in id order already
      }
    }
    rev.push_back(g.id_at(pick));
    s &= ~(uint64_t{1} << pick);
  }
  res.witness.assign(rev.rbegin(), rev.rend());
  return res;
}

CritResult crit_heuristic(const SimpleGraph& g, std::uint64_t seed, int restarts) {
  const int n = g.order();
  CritResult res;
  if (n == 0) throw GraphError("crit of the empty graph is undefined");
  CostOracle cost(g);
  std::mt19937_64 rng(seed);
  res.value = n + 1;
  for (int r = 0; r < restarts; ++r) {
    uint64_t placed = 0;
    std::vector<int> order;
    int total = 0;
    for (int step = 0; step < n; ++step) {
      int best_cost = 2;
      std::vector<int> best;
      for (int p = 0; p < n; ++p) {
        if (placed & (uint64_t{1} << p)) continue;
        int c = cost(p, placed);
        if (c < best_cost) {
          best_cost = c;
          best.clear();
        }
        if (c == best_cost) best.push_back(p);
      }
      std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
      int p = best[pick(rng)];
      placed |= uint64_t{1} << p;
      order.push_back(g.id_at(p));
      total += best_cost;
    }
    if (total < res.value) {
      res.value = total;
      res.witness = std::move(order);
    }
  }
  res.exact = false;
  res.method = "greedy-restarts (upper bound)";
  return res;
}

MorseReport morse_check(const SimpleGraph& g, const std::vector<int>& ordering) {
  check_ordering(g, ordering);
  MorseReport out;
  out.morse = true;
  std::vector<int> prev_b = {};  // Betti of the empty graph: all zero
  uint64_t below = 0;
  for (int x : ordering) {
    int p = g.pos_of(x);
    SimpleGraph sm = g.induced_mask(g.adj_mask(p) & below);
    below |= uint64_t{1} << p;

    MorseStep step;
    step.entry.vertex = x;
    step.entry.sminus_fvector = CliqueComplex(sm).f_vector();
    step.entry.index = 1 - euler_characteristic(sm);
    step.entry.critical = sm.order() == 0 || !is_contractible(sm);
    SimpleGraph sub = g.induced_mask(below);
    step.entry.sublevel_chi = euler_characteristic(sub);
    step.betti_before = prev_b;
    step.betti_after = betti_numbers(CliqueComplex(sub));

    std::size_t len = std::max(step.betti_before.size(), step.betti_after.size());
    std::vector<int> a = step.betti_before, b = step.betti_after;
    a.resize(len, 0);
    b.resize(len, 0);
    if (!step.entry.critical) {
      if (a != b) {
        out.morse = false;
        out.message = "regular vertex " + std::to_string(x) + " changed the Betti vector";
      }
    } else {
      int changed = -1, delta = 0;
      bool single = true;
      for (std::size_t k = 0; k < len; ++k) {
        if (a[k] == b[k]) continue;
        if (changed >= 0) single = false;
        changed = static_cast<int>(k);
        delta = b[k] - a[k];
      }
      bool ok = single && changed >= 0 && (delta == 1 || delta == -1);
      int expect = (changed >= 0 && (changed & 1)) ? -1 : 1;
      if (ok && step.entry.index != expect) ok = false;
      if (ok && step.entry.index != 1 && step.entry.index != -1) ok = false;
      if (!ok && out.morse) {
        out.morse = false;
        out.message = "critical vertex " + std::to_string(x) + " is not of Morse type (index " +
                      std::to_string(step.entry.index) + ")";
      }
      if (ok) {
        step.morse_index = changed;
        if (static_cast<int>(out.c.size()) <= changed) out.c.resize(static_cast<std::size_t>(changed) + 1, 0);
        out.c[static_cast<std::size_t>(changed)] += 1;
      }
    }
    prev_b = step.betti_after;
    out.steps.push_back(std::move(step));
  }
  if (out.morse) out.message = "ok";
  return out;
}

MorseInequalityReport morse_inequalities(const SimpleGraph& g, const std::vector<int>& ordering) {
  MorseReport mr = morse_check(g, ordering);
  if (!mr.morse) throw GraphError("morse_inequalities requires a Morse ordering: " + mr.message);
  MorseInequalityReport out;
  out.b = betti_numbers(CliqueComplex(g));
  out.c = mr.c;
  std::size_t len = std::max(out.b.size(), out.c.size());
  std::vector<int> b = out.b, c = out.c;
  b.resize(len, 0);
  c.resize(len, 0);
  out.ok = true;
  for (std::size_t k = 0; k < len; ++k) {
    int alt_b = 0, alt_c = 0, sign = 1;
    for (std::size_t j = k + 1; j-- > 0; sign = -sign) {
      alt_b += sign * b[j];
      alt_c += sign * c[j];
    }
    out.slack.push_back(alt_c - alt_b);
    if (alt_c < alt_b) out.ok = false;
  }
  int chi_b = 0, chi_c = 0, sign = 1;
  for (std::size_t j = 0; j < len; ++j, sign = -sign) {
    chi_b += sign * b[j];
    chi_c += sign * c[j];
  }
  out.euler_equal = chi_b == chi_c && chi_b == euler_characteristic(g);
  if (!out.euler_equal) out.ok = false;
  out.message = out.ok ? "ok" : "violated";
  return out;
}

CategoryIndexProfile category_index_profile(const SimpleGraph& g, const std::vector<int>& ordering,
                                            const CategoryEvaluator& evaluator) {
  check_ordering(g, ordering);
  CategoryIndexProfile out;
  CategoryBracket prev{0, 0, "empty", "empty"};
  out.exact = true;
  uint64_t below = 0;
  for (int x : ordering) {
    below |= uint64_t{1} << g.pos_of(x);
    CategoryBracket cur = evaluator(g.induced_mask(below));
    CategoryIndexEntry e;
    e.vertex = x;
    e.k_lower = cur.lower - prev.upper;
    e.k_upper = cur.upper - prev.lower;
    if (!cur.tight()) out.exact = false;
    out.entries.push_back(e);
    prev = cur;
  }
  out.total = prev;
  return out;
}

std::vector<int> random_ordering(const SimpleGraph& g, std::uint64_t seed) {
  std::vector<int> order = g.vertices();
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace lscat
