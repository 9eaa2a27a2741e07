#pragma once

#include <gmpxx.h>

#include <string>

namespace lscat {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace lscat
