#include "lscat/forms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lscat/io.hpp"

namespace lscat {
namespace {

// Sorts the tuple, returning the permutation sign, or 0 for repeats.
int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) {
        std::swap(t[i], t[j]);
        sign = -sign;
      }
    }
  return sign;
}

Rational eval_sorted(const CliqueComplex& c, const Form& f, const std::vector<int>& sorted) {
  int idx = c.index_of(sorted);
  if (idx < 0) return Rational(0);
  return f.values[static_cast<std::size_t>(idx)];
}

// Pre exterior product evaluated at an arbitrary tuple (not antisymmetric).
Rational pre_wedge_eval(const CliqueComplex& c, const Form& f, const Form& g,
                        const std::vector<int>& tuple) {
  const int p = f.degree, q = g.degree;
  const int m = p + q;
  Rational acc(0);
  const uint32_t full = (m >= 31) ? 0 : (uint32_t{1} << m);
  for (uint32_t s = 0; s < full; ++s) {
    if (std::popcount(s) != p) continue;
    std::vector<int> left{tuple[0]}, right{tuple[0]};
    int inversions = 0, seen_right = 0;
    for (int i = 0; i < m; ++i) {
      if (s & (uint32_t{1} << i)) {
        left.push_back(tuple[static_cast<std::size_t>(i + 1)]);
        inversions += seen_right;
      } else {
        right.push_back(tuple[static_cast<std::size_t>(i + 1)]);
        ++seen_right;
      }
    }
    // `left` lists the f-arguments in order; inversions counted against the
    // complement give the shuffle sign.
    int lsign = sort_sign(left);
    if (lsign == 0) continue;
    Rational fv = eval_sorted(c, f, left);
    if (fv == 0) continue;
    int rsign = sort_sign(right);
    if (rsign == 0) continue;
    Rational gv = eval_sorted(c, g, right);
    if (gv == 0) continue;
    Rational term = fv * gv;
    if (((inversions & 1) != 0) != (lsign * rsign < 0)) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

Form zero_form(const CliqueComplex& c, int degree) {
  Form f;
  f.degree = degree;
  if (degree >= 0 && degree <= c.dim())
    f.values.assign(c.stratum(degree).size(), Rational(0));
  return f;
}

bool form_is_zero(const Form& f) {
  for (const Rational& v : f.values)
    if (v != 0) return false;
  return true;
}

Rational eval_form(const CliqueComplex& c, const Form& f, std::vector<int> tuple) {
  if (static_cast<int>(tuple.size()) != f.degree + 1) throw std::invalid_argument("eval_form: arity mismatch");
  int sign = sort_sign(tuple);
  if (sign == 0) return Rational(0);
  Rational v = eval_sorted(c, f, tuple);
  return sign > 0 ? v : -v;
}

Form d(const CliqueComplex& c, const Form& f) {
  Form out = zero_form(c, f.degree + 1);
  if (f.degree + 1 > c.dim()) return out;
  const auto& simplices = c.stratum(f.degree + 1);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex& z = simplices[i];
    Rational acc(0);
    Simplex face(z.size() - 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < z.size(); ++k)
        if (k != j) face[w++] = z[k];
      Rational v = eval_sorted(c, f, face);
      if ((j & 1) == 0)
        acc += v;
      else
        acc -= v;
    }
    out.values[i] = acc;
  }
  return out;
}

Form pre_wedge(const CliqueComplex& c, const Form& f, const Form& g) {
  Form out = zero_form(c, f.degree + g.degree);
  const int m = f.degree + g.degree;
  if (m > c.dim()) return out;
  const auto& simplices = c.stratum(m);
  for (std::size_t i = 0; i < simplices.size(); ++i)
    out.values[i] = pre_wedge_eval(c, f, g, simplices[i]);
  return out;
}

Form wedge(const CliqueComplex& c, const Form& f, const Form& g) {
  Form out = zero_form(c, f.degree + g.degree);
  const int m = f.degree + g.degree;
  if (m > c.dim()) return out;
  const auto& simplices = c.stratum(m);
  // A one-step rotation of m+1 entries is m transpositions.
  const bool odd_rotation = (m & 1) != 0;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<int> t = simplices[i];
    Rational acc(0);
    bool negate = false;
    for (int r = 0; r <= m; ++r) {
      Rational term = pre_wedge_eval(c, f, g, t);
      acc += negate ? -term : term;
      std::rotate(t.begin(), t.begin() + 1, t.end());
      if (odd_rotation) negate = !negate;
    }
    out.values[i] = acc / Rational(m + 1);
  }
  return out;
}

std::string form_to_json(const CliqueComplex& c, const Form& f) {
  nlohmann::json j;
  j["degree"] = f.degree;
  nlohmann::json entries = nlohmann::json::array();
  if (f.degree >= 0 && f.degree <= c.dim()) {
    const auto& simplices = c.stratum(f.degree);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      if (f.values[i] == 0) continue;
      nlohmann::json entry = nlohmann::json::array();
      entry.push_back(simplices[i]);
      Integer num = f.values[i].get_num(), den = f.values[i].get_den();
      if (num.fits_slong_p())
        entry.push_back(static_cast<long>(num.get_si()));
      else
        entry.push_back(num.get_str());
      if (den.fits_slong_p())
        entry.push_back(static_cast<long>(den.get_si()));
      else
        entry.push_back(den.get_str());
      entries.push_back(std::move(entry));
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

Form form_from_json(const CliqueComplex& c, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("form: invalid json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree")) throw ParseError("form: missing degree");
  Form f = zero_form(c, j["degree"].get<int>());
  for (const auto& entry : j.value("entries", nlohmann::json::array())) {
    if (!entry.is_array() || entry.size() != 3) throw ParseError("form: entry must be [simplex, num, den]");
    Simplex s = entry[0].get<Simplex>();
    std::sort(s.begin(), s.end());
    int idx = c.index_of(s);
    if (idx < 0) throw ParseError("form: entry names a tuple that is not a simplex of the graph");
    auto read_int = [](const nlohmann::json& v) -> Integer {
      if (v.is_string()) return Integer(v.get<std::string>());
      return Integer(v.get<long>());
    };
    Integer num = read_int(entry[1]), den = read_int(entry[2]);
    if (den == 0) throw ParseError("form: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    f.values[static_cast<std::size_t>(idx)] = q;
  }
  return f;
}

}  // namespace lscat
