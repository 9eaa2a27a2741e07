#pragma once

#include <string>
#include <vector>

#include "lscat/clique.hpp"
#include "lscat/linalg.hpp"
#include "lscat/rational.hpp"

namespace lscat {

// A k-form: one rational per reference k-simplex of the clique complex,
// extended to arbitrary vertex tuples by antisymmetry.
struct Form {
  int degree = 0;
  QVector values;  // aligned with CliqueComplex::stratum(degree)
};

Form zero_form(const CliqueComplex& c, int degree);
bool form_is_zero(const Form& f);

// Antisymmetric evaluation; zero on tuples with repeats or non-cliques.
Rational eval_form(const CliqueComplex& c, const Form& f, std::vector<int> tuple);

// Exterior derivative: (df)(z0..zk+1) = sum_j (-1)^j f(z with zj removed).
Form d(const CliqueComplex& c, const Form& f);

// Pre exterior product: the first argument vertex is shared, the remaining
// p+q are shuffled between the factors with the shuffle sign.
Form pre_wedge(const CliqueComplex& c, const Form& f, const Form& g);

// Signed average of the pre exterior product over cyclic rotations.
Form wedge(const CliqueComplex& c, const Form& f, const Form& g);

std::string form_to_json(const CliqueComplex& c, const Form& f);
Form form_from_json(const CliqueComplex& c, const std::string& text);

}  // namespace lscat
