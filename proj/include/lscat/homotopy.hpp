#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lscat/graph.hpp"

namespace lscat {

// Ivashchenko moves. AddVertex introduces a fresh id attached to every vertex
// of `base`; the induced graph on `base` must be contractible in itself.
// Edge moves require the common-neighbor graph of the endpoints (taken in the
// current graph) to be contractible in itself.
enum class MoveType { RemoveVertex, AddVertex, AddEdge, RemoveEdge };

struct Move {
  MoveType type;
  int vertex = -1;                 // RemoveVertex / AddVertex
  std::pair<int, int> edge{-1, -1};
  std::vector<int> base;           // AddVertex attachment set
};

struct Certificate {
  std::vector<Move> moves;
};

std::string move_name(MoveType t);

// Process-wide memo for contractibility keyed by canonical certificate.
class ContractibilityCache {
 public:
  static ContractibilityCache& instance();
  std::optional<bool> lookup(const std::string& key) const;
  void store(const std::string& key, bool value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, bool> map_;
};

// Contractible in itself: reducible to a point by vertex removals whose
// spheres are themselves contractible (with backtracking over the order).
bool is_contractible(const SimpleGraph& g);

// Witnessing removal order for a contractible graph (all but one vertex).
std::optional<std::vector<int>> collapse_order(const SimpleGraph& g);

// Vertices whose sphere is contractible, i.e. legal RemoveVertex moves.
std::vector<int> removable_vertices(const SimpleGraph& g);

bool move_legal(const SimpleGraph& g, const Move& m, std::string* why = nullptr);
SimpleGraph apply_move(const SimpleGraph& g, const Move& m);  // throws GraphError

struct VerifyOutcome {
  bool ok = false;
  std::string message;
  SimpleGraph final_graph;
  // Image of a tracked vertex set (ids live in the evolving graph).
  std::optional<std::vector<int>> track;
};

VerifyOutcome verify_certificate(const SimpleGraph& start, const Certificate& cert,
                                 const std::optional<std::vector<int>>& track = std::nullopt);

// Greedy removal-only reduction to a core with no removable vertices.
// Deterministic: each step picks the removal minimizing the canonical
// certificate of the result (ties by vertex id).
struct Reduction {
  SimpleGraph core;
  Certificate cert;
};
Reduction reduce(const SimpleGraph& g);

// Vertex set `sub` is contractible within g: either its induced graph is
// contractible in itself, or some sequence of removal moves applied to g
// shrinks the image of `sub` to a single vertex.
struct AmbientBudget {
  std::size_t max_states = 200000;
};
enum class AmbientAnswer { Contractible, NotContractible, Unknown };
AmbientAnswer contractible_in(const SimpleGraph& g, const std::vector<int>& sub,
                              const AmbientBudget& budget = {});

// Position masks of the non-empty connected induced subsets that are
// contractible in themselves: the legal AddVertex attachment bases.
std::vector<uint64_t> contractible_base_masks(const SimpleGraph& g, std::size_t cap);

enum class HomotopyAnswer { Equivalent, Distinct, Unknown };

struct HomotopyBudget {
  int max_extra_vertices = 2;
  std::size_t max_states = 1000000;
};

struct HomotopyResult {
  HomotopyAnswer answer = HomotopyAnswer::Unknown;
  std::optional<Certificate> certificate;  // moves carrying `a` onto a graph isomorphic to `b`
  std::string detail;
};

HomotopyResult homotopic_bounded(const SimpleGraph& a, const SimpleGraph& b,
                                 const HomotopyBudget& budget = {});

// Certificate (de)serialization; schema documented in README.
std::string certificate_to_json(const SimpleGraph& start, const Certificate& cert,
                                const std::optional<SimpleGraph>& end = std::nullopt,
                                const std::optional<std::vector<int>>& track = std::nullopt);
struct CertificateFile {
  SimpleGraph start;
  Certificate cert;
  std::optional<SimpleGraph> end;
  std::optional<std::vector<int>> track;
};
CertificateFile certificate_from_json(const std::string& text);

}  // namespace lscat
