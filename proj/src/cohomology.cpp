#include "lscat/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace lscat {

QMatrix coboundary_matrix(const CliqueComplex& c, int k) {
  QMatrix m;
  if (k < 0 || k >= c.dim() + 1) return m;
  std::size_t cols = (k <= c.dim()) ? c.stratum(k).size() : 0;
  if (k + 1 > c.dim()) return m;
  const auto& rows = c.stratum(k + 1);
  m.assign(rows.size(), QVector(cols, Rational(0)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& z = rows[r];
    Simplex face(z.size() - 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < z.size(); ++i)
        if (i != j) face[w++] = z[i];
      int idx = c.index_of(face);
      if (idx < 0) continue;
      if ((j & 1) == 0)
        m[r][static_cast<std::size_t>(idx)] += 1;
      else
        m[r][static_cast<std::size_t>(idx)] -= 1;
    }
  }
  return m;
}

namespace {

ZMatrix coboundary_matrix_z(const CliqueComplex& c, int k) {
  QMatrix q = coboundary_matrix(c, k);
  ZMatrix z(q.size());
  for (std::size_t r = 0; r < q.size(); ++r) {
    z[r].resize(q[r].size());
    for (std::size_t j = 0; j < q[r].size(); ++j) z[r][j] = Integer(q[r][j].get_num());
  }
  return z;
}

}  // namespace

std::vector<int> betti_numbers(const CliqueComplex& c) {
  const int dim = c.dim();
  if (dim < 0) return {};
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 1, 0);
  for (int k = 0; k <= dim; ++k) ranks[static_cast<std::size_t>(k)] = bareiss_rank(coboundary_matrix_z(c, k));
  std::vector<int> betti(static_cast<std::size_t>(dim) + 1, 0);
  for (int k = 0; k <= dim; ++k) {
    std::size_t vk = c.stratum(k).size();
    std::size_t rk = ranks[static_cast<std::size_t>(k)];
    std::size_t rkm1 = (k > 0) ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    betti[static_cast<std::size_t>(k)] = static_cast<int>(vk - rk - rkm1);
  }
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

std::vector<int> betti_numbers(const SimpleGraph& g) {
  CliqueComplex c(g);
  return betti_numbers(c);
}

CohomologyBasis cohomology_basis(const CliqueComplex& c) {
  CohomologyBasis out;
  out.betti = betti_numbers(c);
  const int dim = c.dim();
  out.representatives.resize(static_cast<std::size_t>(std::max(dim + 1, 0)));
  for (int k = 0; k <= dim; ++k) {
    std::size_t vk = c.stratum(k).size();
    QMatrix dk = coboundary_matrix(c, k);
    std::vector<QVector> kernel;
    if (dk.empty()) {
      // No simplices one degree up: everything is closed.
      for (std::size_t i = 0; i < vk; ++i) {
        QVector e(vk, Rational(0));
        e[i] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = kernel_basis(dk, vk);
    }
    RowSpace space(vk);
    if (k > 0) {
      QMatrix dkm1 = coboundary_matrix(c, k - 1);
      if (!dkm1.empty()) {
        std::size_t w = dkm1[0].size();
        for (std::size_t j = 0; j < w; ++j) {
          QVector col(dkm1.size(), Rational(0));
          for (std::size_t r = 0; r < dkm1.size(); ++r) col[r] = dkm1[r][j];
          space.insert(std::move(col));
        }
      }
    }
    for (QVector& v : kernel) {
      if (space.insert(v)) {
        Form f;
        f.degree = k;
        f.values = v;
        out.representatives[static_cast<std::size_t>(k)].push_back(std::move(f));
      }
    }
  }
  return out;
}

bool is_closed(const CliqueComplex& c, const Form& f) { return form_is_zero(d(c, f)); }

bool is_exact(const CliqueComplex& c, const Form& f) {
  if (form_is_zero(f)) return true;
  if (f.degree == 0) return false;
  QMatrix m = coboundary_matrix(c, f.degree - 1);
  if (m.empty()) return false;
  // f in the column span of d_{k-1}: compare ranks with/without augmentation.
  std::size_t base = rank(m);
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(f.values[r]);
  return rank(std::move(m)) == base;
}

bool class_vanishes(const CliqueComplex& c, const Form& f) {
  if (f.degree > c.dim()) return true;
  return is_exact(c, f);
}

CupResult cup_length(const SimpleGraph& g, const CupOptions& opt) {
  CupResult res;
  CliqueComplex c(g);
  CohomologyBasis basis = cohomology_basis(c);
  const int dim = c.dim();

  struct Cls {
    int degree;
    const Form* form;
  };
  std::vector<Cls> positive;
  for (int k = 1; k <= dim && k < static_cast<int>(basis.representatives.size()); ++k)
    for (const Form& f : basis.representatives[static_cast<std::size_t>(k)]) positive.push_back({k, &f});

  if (positive.empty()) {
    res.lower = res.upper = 1;
    res.lower_method = "trivial-positive-cohomology";
    res.upper_method = "degree-exhaustion";
    return res;
  }

  auto degree_has_classes = [&](int total) {
    return total < static_cast<int>(basis.betti.size()) && basis.betti[static_cast<std::size_t>(total)] > 0;
  };

  std::mt19937_64 rng(opt.seed);
  auto random_class = [&](int deg) {
    const auto& reps = basis.representatives[static_cast<std::size_t>(deg)];
    Form f = zero_form(c, deg);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const Form& r : reps) {
      int a = coeff(rng);
      for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += Rational(a) * r.values[i];
    }
    return f;
  };

  int best = 0;
  std::optional<CupCertificate> best_cert;

  // Find the largest m admitting a non-vanishing m-fold product. Products are
  // multilinear in the classes, so exhausting basis multisets decides each m.
  for (int m = 1;; ++m) {
    bool any_candidate = false, found = false;

    std::function<bool(std::size_t, int, std::vector<std::size_t>&)> dfs =
        [&](std::size_t start, int total, std::vector<std::size_t>& chosen) -> bool {
      if (static_cast<int>(chosen.size()) == m) {
        if (!degree_has_classes(total)) return false;
        any_candidate = true;
        Form prod = *positive[chosen[0]].form;
        for (std::size_t i = 1; i < chosen.size() && !form_is_zero(prod); ++i)
          prod = wedge(c, prod, *positive[chosen[i]].form);
        if (form_is_zero(prod) || class_vanishes(c, prod)) return false;
        std::vector<Form> factors;
        for (std::size_t i : chosen) factors.push_back(*positive[i].form);
        best_cert = CupCertificate{std::move(factors), std::move(prod)};
        return true;
      }
      for (std::size_t i = start; i < positive.size(); ++i) {
        // Odd-degree classes square to zero over the rationals.
        if (!chosen.empty() && chosen.back() == i && (positive[i].degree & 1)) continue;
        int ntotal = total + positive[i].degree;
        if (ntotal > dim) continue;
        chosen.push_back(i);
        if (dfs(i, ntotal, chosen)) return true;
        chosen.pop_back();
      }
      return false;
    };

    std::vector<std::size_t> chosen;
    found = dfs(0, 0, chosen);

    // Random small-integer combinations as a second chance; basis multiset
    // exhaustion is already complete by multilinearity, so these only matter
    // as independent witnesses.
    for (int trial = 0; trial < opt.random_combination_trials && !found; ++trial) {
      std::vector<Form> factors;
      int total = 0;
      std::uniform_int_distribution<std::size_t> which(0, positive.size() - 1);
      bool ok = true;
      for (int i = 0; i < m; ++i) {
        int deg = positive[which(rng)].degree;
        total += deg;
        if (total > dim) {
          ok = false;
          break;
        }
        factors.push_back(random_class(deg));
      }
      if (!ok || !degree_has_classes(total)) continue;
      Form prod = factors[0];
      for (int i = 1; i < m && !form_is_zero(prod); ++i) prod = wedge(c, prod, factors[static_cast<std::size_t>(i)]);
      if (!form_is_zero(prod) && !class_vanishes(c, prod)) {
        found = true;
        best_cert = CupCertificate{std::move(factors), std::move(prod)};
      }
    }

    if (found) {
      best = m;
      continue;
    }
    if (!any_candidate) {
      res.upper_method = "degree-exhaustion";
    } else {
      res.upper_method = "basis-exhaustion";
    }
    break;
  }

  res.lower = res.upper = 1 + best;
  res.lower_method = best > 0 ? "wedge-certificate" : "trivial-product";
  res.certificate = std::move(best_cert);
  return res;
}

}  // namespace lscat
