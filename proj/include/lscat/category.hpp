#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lscat/bracket.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

// A cover member: vertex set plus, when the member is not induced, an
// explicit edge list (edges must lie inside the vertex set and in E(G)).
struct CoverMember {
  std::vector<int> vertices;
  std::optional<std::vector<std::pair<int, int>>> edges;
};

struct Cover {
  std::vector<CoverMember> members;
};

// The member as a standalone graph: explicit edges when given, induced
// edges otherwise. Validates membership against g.
SimpleGraph member_graph(const SimpleGraph& g, const CoverMember& m);

Cover cover_from_json(const std::string& text);
std::string cover_to_json(const Cover& c);

enum class CoverMode { InItself, InG };
enum class MemberStatus { ContractibleItself, ContractibleInG, Failed, Unknown };

struct MemberVerdict {
  MemberStatus status = MemberStatus::Failed;
  std::string message;
};

struct CoverVerification {
  bool coverage_ok = false;
  std::vector<int> uncovered_vertices;
  std::vector<std::pair<int, int>> uncovered_edges;
  std::vector<MemberVerdict> members;
  bool ok = false;        // coverage and every member verified
  bool unknown = false;   // some member hit the search budget
  // When ok: certified upper bound |members| for tcat (and gcat in
  // InItself mode).
  std::optional<int> bound;
};

CoverVerification verify_cover(const SimpleGraph& g, const Cover& c, CoverMode mode,
                               const AmbientBudget& budget = {});

struct GcatResult {
  int value = 0;
  bool exact = false;
  std::optional<Cover> cover;
  std::string method;
};

// Exact geometric category: minimal number of induced-contractible vertex
// subsets covering all vertices and edges. Exponential; refuses past limit.
GcatResult gcat_exact(const SimpleGraph& g, int limit = 10);

struct TcatOptions {
  int gcat_limit = 10;
  int dp_limit = 22;
  std::vector<Cover> covers;  // candidate covers, verified in InG mode
  AmbientBudget ambient{};
};

// cup(G) <= cat(G) <= tcat(G) <= min(gcat(G), crit(G)); lower bound is cup,
// raised to 2 for connected non-contractible graphs (tcat = 1 iff
// contractible), upper bound the best certified cover size.
CategoryBracket tcat_bracket(const SimpleGraph& g, const TcatOptions& opt = {});

struct ClassSearchOptions {
  TcatOptions tcat{};
  int max_extra_vertices = 1;
  std::size_t max_states = 300;
  int rep_dp_limit = 14;    // crit DP cap while scanning representatives
  int rep_gcat_limit = 8;   // gcat cap while scanning representatives
};

// Homotopy-invariant brackets: minimize the tcat upper bound (cat) or crit
// (cri) over representatives reachable from G and its reduction by bounded
// move search. Lower bound stays cup, which is a homotopy invariant.
CategoryBracket cat_bracket(const SimpleGraph& g, const ClassSearchOptions& opt = {});
CategoryBracket cri_bracket(const SimpleGraph& g, const ClassSearchOptions& opt = {});

// Merge a contractible subgraph H into every member meeting it, so each
// member meets H in nothing or all of H. Size-preserving; verification
// preservation is property-tested, not proven.
Cover normalize_cover(const SimpleGraph& g, const Cover& c, const std::vector<int>& h);

// Evaluator chain used for category curvature and index profiles:
// components of the reduction that are contractible count 1, single cycles
// count 2; otherwise fall back to [max(cup, 2 if non-contractible),
// min(gcat, crit)]. Exact whenever the bracket closes.
CategoryBracket evaluate_cat(const SimpleGraph& g);
CategoryEvaluator default_category_evaluator();

}  // namespace lscat
