#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lscat/category.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/graph.hpp"
#include "lscat/morse.hpp"

namespace lscat {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "lscat-invariants/1";

struct ReportOptions {
  std::uint64_t seed = 0;
  int dp_limit = 22;
  AmbientBudget ambient{};
  HomotopyBudget class_budget{1, 300};  // representative scan for cat/cri
  std::vector<Cover> covers;            // candidate covers, verified in-G
  bool timings = false;                 // wall times break byte-stability; opt-in
};

// One bundle with every invariant of a single graph: counting data (f-vector,
// Euler characteristic, Betti numbers), the cup bracket, crit (exact or an
// upper bound, tagged), and the category brackets. Every number carries an
// exactness tag or a bracket; nothing is guessed.
struct InvariantReport {
  std::string source;
  std::string certificate;  // canonical isomorphism certificate
  int order = 0;
  std::size_t size = 0;
  std::vector<long long> f_vector;
  long long chi = 0;
  std::vector<int> betti;
  std::string poincare;  // Betti generating polynomial in t
  bool contractible = false;
  CupResult cup;
  CritResult crit;
  CategoryBracket tcat;
  CategoryBracket cat;
  CategoryBracket cri;
  ReportOptions options;
  double elapsed_ms = 0.0;
};

InvariantReport invariant_report(const SimpleGraph& g, const std::string& source,
                                 const ReportOptions& opt = {});

std::string poincare_polynomial(const std::vector<int>& betti);

// Stable key order, two-space indent, trailing newline. Timing only when
// opted in so that fixed (input, seed, budget, version) gives fixed bytes.
std::string report_to_json(const InvariantReport& rep);
std::string report_to_text(const InvariantReport& rep);

}  // namespace lscat
