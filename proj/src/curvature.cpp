#include "lscat/curvature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"

namespace lscat {

namespace {

Rational factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

// Weight of a fixed subset of size s among orderings of n elements where the
// distinguished element arrives right after the subset: s!(n-1-s)!/n!.
Rational subset_weight(int s, int n) {
  Rational w = factorial(s) * factorial(n - 1 - s);
  w /= factorial(n);
  return w;
}

double clt_radius(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
  return 2.5758 * std::sqrt(var / static_cast<double>(xs.size()));  // 99% two-sided
}

Rational to_rational(double x) {
  // Fixed denominator keeps reports byte-stable.
  Integer num(std::to_string(std::llround(x * 1e9)));
  Rational r(num, Integer(1000000000));
  r.canonicalize();
  return r;
}

}  // namespace

CurvatureReport euler_curvature(const SimpleGraph& g, int degree_cap, std::size_t mc_samples,
                                std::uint64_t seed) {
  CurvatureReport rep;
  rep.kind = "euler";
  std::mt19937_64 rng(seed);
  for (int x : g.vertices()) {
    std::vector<int> nbrs = g.neighbors(x);
    const int d = static_cast<int>(nbrs.size());
    VertexCurvature vc;
    vc.vertex = x;
    if (d <= degree_cap) {
      Rational k = 0;
      for (uint64_t w = 0; w < (uint64_t{1} << d); ++w) {
        std::vector<int> sub;
        for (int i = 0; i < d; ++i)
          if (w & (uint64_t{1} << i)) sub.push_back(nbrs[static_cast<std::size_t>(i)]);
        int chi = euler_characteristic(g.induced(sub));
        k += Rational(1 - chi) * subset_weight(static_cast<int>(sub.size()), d + 1);
      }
      vc.lower = vc.upper = k;
    } else {
      rep.tag = CurvatureTag::MonteCarlo;
      rep.samples = mc_samples;
      std::vector<double> vals;
      std::uniform_int_distribution<int> rank(0, d);
      for (std::size_t s = 0; s < mc_samples; ++s) {
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        int r = rank(rng);
        std::vector<int> sub(nbrs.begin(), nbrs.begin() + r);
        vals.push_back(1.0 - euler_characteristic(g.induced(sub)));
      }
      double mean = 0;
      for (double v : vals) mean += v;
      mean /= static_cast<double>(vals.size());
      double rad = clt_radius(vals);
      vc.lower = to_rational(mean - rad);
      vc.upper = to_rational(mean + rad);
    }
    rep.total_lower += vc.lower;
    rep.total_upper += vc.upper;
    rep.entries.push_back(std::move(vc));
  }
  return rep;
}

namespace {

template <typename Value>
class SubsetMemo {
 public:
  explicit SubsetMemo(std::function<Value(uint64_t)> f) : f_(std::move(f)) {}
  const Value& get(uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(mask, f_(mask)).first->second;
  }

 private:
  std::function<Value(uint64_t)> f_;
  std::unordered_map<uint64_t, Value> memo_;
};

int betti_k_of_mask(const SimpleGraph& g, uint64_t mask, int k) {
  if (mask == 0) return 0;
  std::vector<int> b = betti_numbers(g.induced_mask(mask));
  return k < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(k)] : 0;
}

}  // namespace

CurvatureReport betti_curvature(const SimpleGraph& g, int k, int exact_limit,
                                std::size_t mc_samples, std::uint64_t seed) {
  CurvatureReport rep;
  rep.kind = "betti:" + std::to_string(k);
  const int n = g.order();
  if (n == 0) return rep;
  if (n <= exact_limit) {
    SubsetMemo<int> bk([&](uint64_t m) { return betti_k_of_mask(g, m, k); });
    for (int p = 0; p < n; ++p) {
      VertexCurvature vc;
      vc.vertex = g.id_at(p);
      Rational acc = 0;
      uint64_t others = ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)) & ~(uint64_t{1} << p);
      // Iterate subsets of the other vertices.
      uint64_t s = 0;
      while (true) {
        int before = bk.get(s);
        int after = bk.get(s | (uint64_t{1} << p));
        if (after != before)
          acc += Rational(after - before) * subset_weight(std::popcount(s), n);
        if (s == others) break;
        s = (s - others) & others;  // next subset of `others`
      }
      vc.lower = vc.upper = acc;
      rep.total_lower += vc.lower;
      rep.total_upper += vc.upper;
      rep.entries.push_back(std::move(vc));
    }
    return rep;
  }
  rep.tag = CurvatureTag::MonteCarlo;
  rep.samples = mc_samples;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> vals(static_cast<std::size_t>(n));
  std::vector<int> order = g.vertices();
  for (std::size_t s = 0; s < mc_samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    uint64_t below = 0;
    int prev = 0;
    for (int x : order) {
      below |= uint64_t{1} << g.pos_of(x);
      int cur = betti_k_of_mask(g, below, k);
      vals[static_cast<std::size_t>(g.pos_of(x))].push_back(cur - prev);
      prev = cur;
    }
  }
  for (int p = 0; p < n; ++p) {
    VertexCurvature vc;
    vc.vertex = g.id_at(p);
    const auto& xs = vals[static_cast<std::size_t>(p)];
    double mean = 0;
    for (double v : xs) mean += v;
    mean /= static_cast<double>(xs.size());
    double rad = clt_radius(xs);
    vc.lower = to_rational(mean - rad);
    vc.upper = to_rational(mean + rad);
    rep.total_lower += vc.lower;
    rep.total_upper += vc.upper;
    rep.entries.push_back(std::move(vc));
  }
  return rep;
}

CurvatureReport category_curvature(const SimpleGraph& g, const CategoryEvaluator& evaluator,
                                   int exact_limit, std::size_t mc_samples, std::uint64_t seed) {
  CurvatureReport rep;
  rep.kind = "category";
  const int n = g.order();
  if (n == 0) return rep;
  if (n <= exact_limit) {
    SubsetMemo<CategoryBracket> cat([&](uint64_t m) {
      if (m == 0) return CategoryBracket{0, 0, "empty", "empty"};
      return evaluator(g.induced_mask(m));
    });
    bool all_tight = true;
    for (int p = 0; p < n; ++p) {
      VertexCurvature vc;
      vc.vertex = g.id_at(p);
      Rational lo = 0, hi = 0;
      uint64_t others = ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)) & ~(uint64_t{1} << p);
      uint64_t s = 0;
      while (true) {
        const CategoryBracket& before = cat.get(s);
        const CategoryBracket& after = cat.get(s | (uint64_t{1} << p));
        if (!before.tight() || !after.tight()) all_tight = false;
        Rational w = subset_weight(std::popcount(s), n);
        lo += Rational(after.lower - before.upper) * w;
        hi += Rational(after.upper - before.lower) * w;
        if (s == others) break;
        s = (s - others) & others;
      }
      vc.lower = lo;
      vc.upper = hi;
      rep.total_lower += vc.lower;
      rep.total_upper += vc.upper;
      rep.entries.push_back(std::move(vc));
    }
    rep.tag = all_tight ? CurvatureTag::Exact : CurvatureTag::Bracket;
    return rep;
  }
  rep.tag = CurvatureTag::MonteCarlo;
  rep.samples = mc_samples;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> los(static_cast<std::size_t>(n)), his(static_cast<std::size_t>(n));
  std::vector<int> order = g.vertices();
  std::unordered_map<std::string, CategoryBracket> memo;
  for (std::size_t s = 0; s < mc_samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    uint64_t below = 0;
    CategoryBracket prev{0, 0, "empty", "empty"};
    for (int x : order) {
      below |= uint64_t{1} << g.pos_of(x);
      CategoryBracket cur = evaluator(g.induced_mask(below));
      los[static_cast<std::size_t>(g.pos_of(x))].push_back(cur.lower - prev.upper);
      his[static_cast<std::size_t>(g.pos_of(x))].push_back(cur.upper - prev.lower);
      prev = cur;
    }
  }
  for (int p = 0; p < n; ++p) {
    VertexCurvature vc;
    vc.vertex = g.id_at(p);
    double mlo = 0, mhi = 0;
    for (double v : los[static_cast<std::size_t>(p)]) mlo += v;
    for (double v : his[static_cast<std::size_t>(p)]) mhi += v;
    mlo /= static_cast<double>(mc_samples);
    mhi /= static_cast<double>(mc_samples);
    double rad = std::max(clt_radius(los[static_cast<std::size_t>(p)]),
                          clt_radius(his[static_cast<std::size_t>(p)]));
    vc.lower = to_rational(mlo - rad);
    vc.upper = to_rational(mhi + rad);
    rep.total_lower += vc.lower;
    rep.total_upper += vc.upper;
    rep.entries.push_back(std::move(vc));
  }
  return rep;
}

}  // namespace lscat
