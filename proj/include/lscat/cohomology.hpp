#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lscat/forms.hpp"
#include "lscat/graph.hpp"

namespace lscat {

// Matrix of the exterior derivative from degree k to k+1 (rows: k+1 simplices).
QMatrix coboundary_matrix(const CliqueComplex& c, int k);

std::vector<int> betti_numbers(const CliqueComplex& c);
std::vector<int> betti_numbers(const SimpleGraph& g);

struct CohomologyBasis {
  std::vector<int> betti;
  // representatives[k] spans H^k: closed degree-k forms independent modulo
  // coboundaries.
  std::vector<std::vector<Form>> representatives;
};
CohomologyBasis cohomology_basis(const CliqueComplex& c);

bool is_closed(const CliqueComplex& c, const Form& f);
bool is_exact(const CliqueComplex& c, const Form& f);
// Whether the class [f] is zero in cohomology (f must be closed).
bool class_vanishes(const CliqueComplex& c, const Form& f);

struct CupCertificate {
  std::vector<Form> factors;  // positive-degree closed forms
  Form product;               // their wedge; not a coboundary
};

struct CupResult {
  int lower = 1;
  int upper = 1;
  std::string lower_method;
  std::string upper_method;
  std::optional<CupCertificate> certificate;
  bool tight() const { return lower == upper; }
};

struct CupOptions {
  int random_combination_trials = 64;
  std::uint64_t seed = 0;
};

// Cup length: 1 + the maximal number of positive-degree cohomology classes
// with a non-vanishing product. Basis products are searched first and decide
// the question exactly (the product is multilinear in each factor); random
// combinations run afterwards only as extra lower-bound witnesses.
CupResult cup_length(const SimpleGraph& g, const CupOptions& opt = {});

}  // namespace lscat
