#include "lscat/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/io.hpp"

namespace lscat {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Connectivity of an n-vertex graph given as adjacency masks.
bool mask_connected(const std::vector<std::uint64_t>& adj, int n) {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n >= 64 ? ~0ULL : (1ULL << n) - 1);
}

struct ClassGroup {
  SimpleGraph core;         // reduced representative
  std::string core_cert;
  std::size_t members = 0;  // isomorphism classes reducing to this core
};

struct DSU {
  std::vector<std::size_t> parent;
  explicit DSU(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::string cell_key(long long chi, const std::vector<int>& betti, int cup) {
  std::ostringstream os;
  os << chi << '|' << cup << '|';
  for (int b : betti) os << b << ',';
  return os.str();
}

}  // namespace

std::vector<SimpleGraph> enumerate_connected(int n, unsigned threads) {
  if (n < 1 || n > 8) throw GraphError("enumerate_connected: order must be in 1..8");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const std::uint64_t total = 1ULL << slots.size();
  const unsigned nthreads = std::min<unsigned>(resolve_threads(threads), 16);

  std::mutex mu;
  std::unordered_map<std::string, SimpleGraph> reps;
  auto worker = [&](unsigned shard) {
    std::unordered_map<std::string, SimpleGraph> local;
    for (std::uint64_t mask = shard; mask < total; mask += nthreads) {
      std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) {
          adj[static_cast<std::size_t>(slots[b].first)] |= 1ULL << slots[b].second;
          adj[static_cast<std::size_t>(slots[b].second)] |= 1ULL << slots[b].first;
        }
      if (!mask_connected(adj, n)) continue;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) edges.push_back(slots[b]);
      SimpleGraph g(n, edges);
      local.emplace(canonical_certificate(g), std::move(g));
    }
    std::scoped_lock lock(mu);
    for (auto& [cert, g] : local) reps.emplace(cert, std::move(g));
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();

  std::vector<SimpleGraph> out;
  out.reserve(reps.size());
  std::vector<const std::string*> order;
  order.reserve(reps.size());
  for (auto& [cert, g] : reps) order.push_back(&cert);
  std::sort(order.begin(), order.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* cert : order) out.push_back(reps.at(*cert));
  return out;
}

CensusReport census(const CensusOptions& opt) {
  CensusReport rep;
  rep.order = opt.order;
  std::vector<SimpleGraph> graphs = enumerate_connected(opt.order, opt.threads);
  rep.iso_count = graphs.size();

  // Partition isomorphism classes into cells by (chi, betti, cup): graphs in
  // different cells are homotopy-distinct, so only intra-cell pairs need a
  // move search.
  struct CellData {
    long long chi;
    std::vector<int> betti;
    int cup;
    std::vector<ClassGroup> groups;  // distinct cores inside the cell
  };
  std::map<std::string, CellData> cells;
  std::mutex mu;
  const unsigned nthreads = resolve_threads(opt.threads);
  std::atomic<std::size_t> next{0};
  auto classify = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= graphs.size()) return;
      const SimpleGraph& g = graphs[idx];
      long long chi = euler_characteristic(g);
      std::vector<int> betti = betti_numbers(g);
      while (!betti.empty() && betti.back() == 0) betti.pop_back();
      CupResult cup = cup_length(g);
      SimpleGraph core = reduce(g).core;
      std::string core_cert = canonical_certificate(core);
      std::scoped_lock lock(mu);
      CellData& cell = cells[cell_key(chi, betti, cup.lower)];
      cell.chi = chi;
      cell.betti = betti;
      cell.cup = cup.lower;
      auto it = std::find_if(cell.groups.begin(), cell.groups.end(),
                             [&](const ClassGroup& cg) { return cg.core_cert == core_cert; });
      if (it == cell.groups.end())
        cell.groups.push_back({std::move(core), std::move(core_cert), 1});
      else
        ++it->members;
    }
  };
  {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(classify);
    for (auto& t : pool) t.join();
  }

  // Inside each cell, link cores pairwise with bounded move searches. Failed
  // searches leave the pair unresolved; such cells report a class-count range
  // instead of an exact value.
  for (auto& [key, cell] : cells) {
    std::sort(cell.groups.begin(), cell.groups.end(),
              [](const ClassGroup& a, const ClassGroup& b) {
                if (a.core.order() != b.core.order()) return a.core.order() < b.core.order();
                return a.core_cert < b.core_cert;
              });
    const std::size_t k = cell.groups.size();
    DSU dsu(k);
    bool unknown_pair = false;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (dsu.find(i) == dsu.find(j)) continue;
        HomotopyResult link =
            homotopic_bounded(cell.groups[i].core, cell.groups[j].core, opt.link_budget);
        if (link.answer == HomotopyAnswer::Equivalent)
          dsu.unite(i, j);
        else if (link.answer == HomotopyAnswer::Unknown)
          unknown_pair = true;
        // Distinct cannot occur here: both cores share chi, betti and cup.
      }

    // Merge groups by union-find root into census classes.
    std::map<std::size_t, std::size_t> root_to_class;
    CensusCell out_cell;
    out_cell.chi = static_cast<int>(cell.chi);
    out_cell.betti = cell.betti;
    out_cell.cup = cell.cup;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t root = dsu.find(i);
      auto [it, fresh] = root_to_class.emplace(root, rep.classes.size());
      if (fresh) {
        CensusClass cls;
        cls.representative = cell.groups[i].core;
        cls.representative_g6 = serialize_graph6(cell.groups[i].core);
        cls.member_count = 0;
        rep.classes.push_back(std::move(cls));
        out_cell.class_ids.push_back(it->second);
      }
      CensusClass& cls = rep.classes[it->second];
      cls.member_count += cell.groups[i].members;
      if (cell.groups[i].core.order() < cls.representative.order()) {
        cls.representative = cell.groups[i].core;
        cls.representative_g6 = serialize_graph6(cell.groups[i].core);
      }
    }
    // A cell with a single surviving class is resolved even if some searches
    // timed out between groups later merged through a third one.
    out_cell.resolved = !unknown_pair || out_cell.class_ids.size() == 1;
    if (!out_cell.resolved) {
      bool all_pairs_joined = true;
      for (std::size_t i = 0; i < k && all_pairs_joined; ++i)
        for (std::size_t j = i + 1; j < k && all_pairs_joined; ++j)
          if (dsu.find(i) != dsu.find(j)) all_pairs_joined = false;
      out_cell.resolved = all_pairs_joined;
    }
    if (!out_cell.resolved) rep.fully_resolved = false;
    rep.cells.push_back(std::move(out_cell));
  }

  rep.homotopy_count_max = rep.classes.size();
  // Lower bound: unresolved cells might collapse to one class each.
  std::size_t lower = 0;
  for (const CensusCell& c : rep.cells) lower += c.resolved ? c.class_ids.size() : 1;
  rep.homotopy_count = rep.fully_resolved ? rep.classes.size() : lower;
  return rep;
}

std::string census_to_json(const CensusReport& rep) {
  nlohmann::json j;
  j["order"] = rep.order;
  j["isomorphism_classes"] = rep.iso_count;
  j["fully_resolved"] = rep.fully_resolved;
  j["homotopy_classes"] = rep.homotopy_count;
  j["homotopy_classes_max"] = rep.homotopy_count_max;
  j["classes"] = nlohmann::json::array();
  for (const CensusClass& c : rep.classes) {
    nlohmann::json jc;
    jc["graph6"] = c.representative_g6;
    jc["order"] = c.representative.order();
    jc["size"] = static_cast<std::size_t>(c.representative.size());
    jc["isomorphism_classes"] = c.member_count;
    j["classes"].push_back(std::move(jc));
  }
  j["cells"] = nlohmann::json::array();
  for (const CensusCell& c : rep.cells) {
    nlohmann::json jc;
    jc["chi"] = c.chi;
    jc["betti"] = c.betti;
    jc["cup"] = c.cup;
    jc["classes"] = c.class_ids;
    jc["resolved"] = c.resolved;
    j["cells"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

}  // namespace lscat
