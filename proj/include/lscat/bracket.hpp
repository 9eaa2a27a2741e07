#pragma once

#include <functional>
#include <string>

#include "lscat/graph.hpp"

namespace lscat {

// Certified integer interval with provenance tags for both bounds.
struct CategoryBracket {
  int lower = 0;
  int upper = 0;
  std::string lower_method;
  std::string upper_method;

  bool tight() const { return lower == upper; }
};

// Evaluates cat(H) for filtration prefixes. Injected where filtration code
// needs category values, so the morse/curvature modules stay decoupled from
// the category module.
using CategoryEvaluator = std::function<CategoryBracket(const SimpleGraph&)>;

}  // namespace lscat
