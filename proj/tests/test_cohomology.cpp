#include <random>

#include "doctest.h"
#include "lscat/cohomology.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/forms.hpp"
#include "lscat/graph.hpp"

using namespace lscat;

namespace {

std::vector<int> trimmed_betti(const SimpleGraph& g) {
  std::vector<int> b = betti_numbers(g);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

SimpleGraph random_connected(std::mt19937_64& rng, int n, double p) {
  while (true) {
    std::vector<std::pair<int, int>> es;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) es.push_back({i, j});
    SimpleGraph g(n, es);
    if (g.is_connected()) return g;
  }
}

Form random_form(std::mt19937_64& rng, const CliqueComplex& c, int degree) {
  Form f = zero_form(c, degree);
  for (Rational& v : f.values) v = Rational((long)(rng() % 7) - 3);
  return f;
}

bool forms_equal(const Form& a, const Form& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size()) return false;
  for (size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return false;
  return true;
}

Form scaled(Form f, const Rational& s) {
  for (Rational& v : f.values) v *= s;
  return f;
}

Form sum(Form a, const Form& b) {
  for (size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
  return a;
}

}  // namespace

TEST_CASE("Betti numbers of reference spaces") {
  CHECK(trimmed_betti(SimpleGraph::complete(5)) == std::vector<int>{1});
  CHECK(trimmed_betti(SimpleGraph::path(6)) == std::vector<int>{1});
  for (int n = 4; n <= 8; ++n)
    CHECK(trimmed_betti(SimpleGraph::cycle(n)) == std::vector<int>{1, 1});
  CHECK(trimmed_betti(fixture("octahedron").graph) == std::vector<int>{1, 0, 1});
  CHECK(trimmed_betti(fixture("icosahedron").graph) == std::vector<int>{1, 0, 1});
  CHECK(trimmed_betti(fixture("cross_polytope_3").graph) == std::vector<int>{1, 0, 1});
  CHECK(trimmed_betti(fixture("figure8").graph) == std::vector<int>{1, 2});
  CHECK(trimmed_betti(fixture("torus16").graph) == std::vector<int>{1, 2, 1});
  CHECK(trimmed_betti(SimpleGraph::discrete(3)) == std::vector<int>{3});

  // Euler-Poincare on the torus: 16 - 48 + 32 = 0 = 1 - 2 + 1
  CliqueComplex t(fixture("torus16").graph);
  CHECK(t.f_vector() == std::vector<int>{16, 48, 32});
  CHECK(t.euler_characteristic() == 0);
}

TEST_CASE("coboundary matrices compose to zero") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    SimpleGraph g = random_connected(rng, 7, 0.55);
    CliqueComplex c(g);
    for (int k = 0; k + 1 <= c.dim(); ++k) {
      QMatrix a = coboundary_matrix(c, k);      // C^k -> C^{k+1}
      QMatrix b = coboundary_matrix(c, k + 1);  // C^{k+1} -> C^{k+2}
      if (b.empty() || a.empty()) continue;
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < (a.empty() ? 0 : a[0].size()); ++j) {
          Rational s = 0;
          for (size_t m = 0; m < a.size(); ++m) s += b[i][m] * a[m][j];
          CHECK(s == 0);
        }
    }
  }
}

TEST_CASE("d of d is zero on random forms") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    SimpleGraph g = random_connected(rng, 7, 0.5);
    CliqueComplex c(g);
    for (int k = 0; k <= c.dim(); ++k) {
      Form f = random_form(rng, c, k);
      CHECK(form_is_zero(d(c, d(c, f))));
    }
  }
}

TEST_CASE("form evaluation is antisymmetric") {
  std::mt19937_64 rng(43);
  SimpleGraph g = SimpleGraph::complete(5);
  CliqueComplex c(g);
  Form f = random_form(rng, c, 2);
  CHECK(eval_form(c, f, {0, 1, 2}) == -eval_form(c, f, {1, 0, 2}));
  CHECK(eval_form(c, f, {0, 1, 2}) == eval_form(c, f, {1, 2, 0}));
  CHECK(eval_form(c, f, {0, 1, 1}) == 0);
  SimpleGraph c4 = SimpleGraph::cycle(4);
  CliqueComplex cc(c4);
  Form e = random_form(rng, cc, 1);
  CHECK(eval_form(cc, e, {0, 2}) == 0);  // not an edge
}

TEST_CASE("wedge laws on random graphs") {
  std::mt19937_64 rng(44);
  int done = 0;
  while (done < 30) {
    SimpleGraph g = random_connected(rng, 6, 0.7);
    CliqueComplex c(g);
    if (c.dim() < 2) continue;
    ++done;
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; p + q <= c.dim(); ++q) {
        Form f = random_form(rng, c, p);
        Form g2 = random_form(rng, c, q);
        // graded commutativity
        Form fg = wedge(c, f, g2);
        Form gf = wedge(c, g2, f);
        CHECK(forms_equal(fg, scaled(gf, ((p * q) % 2) ? Rational(-1) : Rational(1))));
        // bilinearity
        Form h = random_form(rng, c, q);
        CHECK(forms_equal(wedge(c, f, sum(g2, h)), sum(wedge(c, f, g2), wedge(c, f, h))));
        // Leibniz on closed factors: the product of closed forms is closed
        if (is_closed(c, f) && is_closed(c, g2)) CHECK(is_closed(c, fg));
      }
    // Leibniz in general, degree (1,1)
    Form f = random_form(rng, c, 1);
    Form h = random_form(rng, c, 1);
    Form lhs = d(c, wedge(c, f, h));
    Form rhs = sum(wedge(c, d(c, f), h), scaled(wedge(c, f, d(c, h)), Rational(-1)));
    CHECK(forms_equal(lhs, rhs));
  }
}

TEST_CASE("cohomology bases are closed, non-exact and complete") {
  for (const char* name : {"cycle_5", "octahedron", "figure8", "torus16"}) {
    SimpleGraph g = fixture(name).graph;
    CliqueComplex c(g);
    CohomologyBasis basis = cohomology_basis(c);
    CHECK(basis.betti == betti_numbers(c));
    for (int k = 0; k < (int)basis.representatives.size(); ++k) {
      CHECK((int)basis.representatives[k].size() == basis.betti[k]);
      for (const Form& f : basis.representatives[k]) {
        CHECK(is_closed(c, f));
        if (k > 0) CHECK_FALSE(class_vanishes(c, f));
      }
    }
  }
}

TEST_CASE("exactness detectors") {
  std::mt19937_64 rng(45);
  SimpleGraph g = fixture("octahedron").graph;
  CliqueComplex c(g);
  Form f = random_form(rng, c, 0);
  Form df = d(c, f);
  CHECK(is_closed(c, df));
  CHECK(is_exact(c, df));
  CHECK(class_vanishes(c, df));

  // a 1-cocycle with nonzero class on the circle
  CliqueComplex cc(SimpleGraph::cycle(5));
  CohomologyBasis basis = cohomology_basis(cc);
  REQUIRE(basis.betti.size() >= 2);
  REQUIRE(basis.betti[1] == 1);
  const Form& gen = basis.representatives[1][0];
  CHECK_FALSE(is_exact(cc, gen));
  CHECK_FALSE(class_vanishes(cc, gen));
}

TEST_CASE("cup length of reference spaces") {
  auto cup = [](const SimpleGraph& g) {
    CupResult r = cup_length(g);
    REQUIRE(r.tight());
    return r.lower;
  };
  CHECK(cup(SimpleGraph::complete(5)) == 1);
  CHECK(cup(fixture("wheel_6").graph) == 1);
  for (int n = 4; n <= 8; ++n) CHECK(cup(SimpleGraph::cycle(n)) == 2);
  CHECK(cup(fixture("octahedron").graph) == 2);
  CHECK(cup(fixture("icosahedron").graph) == 2);
  // products of the two circle classes vanish on a wedge
  CHECK(cup(fixture("figure8").graph) == 2);
  CHECK(cup(fixture("torus16").graph) == 3);
}

TEST_CASE("torus cup certificate multiplies out") {
  CupResult r = cup_length(fixture("torus16").graph);
  REQUIRE(r.certificate.has_value());
  CliqueComplex c(fixture("torus16").graph);
  REQUIRE(r.certificate->factors.size() == 2);
  Form prod = wedge(c, r.certificate->factors[0], r.certificate->factors[1]);
  CHECK(forms_equal(prod, r.certificate->product));
  for (const Form& f : r.certificate->factors) {
    CHECK(is_closed(c, f));
    CHECK_FALSE(class_vanishes(c, f));
  }
  CHECK(is_closed(c, prod));
  CHECK_FALSE(class_vanishes(c, prod));
}

TEST_CASE("cup products ignore the choice of representative") {
  std::mt19937_64 rng(46);
  SimpleGraph g = fixture("torus16").graph;
  CliqueComplex c(g);
  CohomologyBasis basis = cohomology_basis(c);
  const Form& a = basis.representatives[1][0];
  const Form& b = basis.representatives[1][1];
  Form ab = wedge(c, a, b);
  // shift a by a coboundary: the product class must not move
  Form shift = d(c, random_form(rng, c, 0));
  Form a2 = sum(a, shift);
  Form ab2 = wedge(c, a2, b);
  Form diff = sum(ab2, scaled(ab, Rational(-1)));
  CHECK(is_closed(c, diff));
  CHECK(class_vanishes(c, diff));
}

TEST_CASE("form json round trip") {
  std::mt19937_64 rng(47);
  CliqueComplex c(fixture("octahedron").graph);
  Form f = random_form(rng, c, 1);
  Form back = form_from_json(c, form_to_json(c, f));
  CHECK(forms_equal(f, back));
}
