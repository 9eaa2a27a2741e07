#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"

namespace lscat {

// All connected graphs on n vertices up to isomorphism (vertex ids 0..n-1).
// Enumeration over edge masks, sharded across threads, deduplicated by
// canonical certificate. n <= 8.
std::vector<SimpleGraph> enumerate_connected(int n, unsigned threads = 0);

struct CensusClass {
  SimpleGraph representative;     // smallest core found in the class
  std::string representative_g6;  // canonical graph6
  std::size_t member_count = 0;   // isomorphism classes merged into the class
};

struct CensusCell {
  int chi = 0;
  std::vector<int> betti;
  int cup = 1;
  std::vector<std::size_t> class_ids;
  bool resolved = true;  // all pairs inside the cell decided
};

struct CensusOptions {
  int order = 4;
  HomotopyBudget link_budget{3, 400000};
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct CensusReport {
  int order = 0;
  std::size_t iso_count = 0;
  std::vector<CensusClass> classes;
  std::vector<CensusCell> cells;
  bool fully_resolved = true;
  std::size_t homotopy_count = 0;      // exact when fully_resolved
  std::size_t homotopy_count_max = 0;  // worst case: unknown pairs distinct
};

CensusReport census(const CensusOptions& opt);

std::string census_to_json(const CensusReport& rep);

}  // namespace lscat
