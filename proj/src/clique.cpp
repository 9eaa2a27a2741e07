#include "lscat/clique.hpp"

#include <bit>

namespace lscat {
namespace {

// Enumerates cliques by extending with higher-position common neighbors.
template <class Visit>
void extend(const SimpleGraph& g, std::vector<int>& cur, uint64_t cands, int max_size, Visit&& visit) {
  while (cands) {
    int p = std::countr_zero(cands);
    cands &= cands - 1;
    cur.push_back(p);
    visit(cur);
    if (max_size < 0 || static_cast<int>(cur.size()) < max_size) {
      uint64_t next = cands & g.adj_mask(p);
      extend(g, cur, next, max_size, visit);
    }
    cur.pop_back();
  }
}

}  // namespace

CliqueComplex::CliqueComplex(const SimpleGraph& g, int max_dim) : g_(g) {
  uint64_t all = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
  std::vector<int> cur;
  int max_size = max_dim < 0 ? -1 : max_dim + 1;
  extend(g, cur, all, max_size, [&](const std::vector<int>& c) {
    size_t k = c.size() - 1;
    if (strata_.size() <= k) {
      strata_.resize(k + 1);
      index_.resize(k + 1);
    }
    Simplex s(c.size());
    for (size_t i = 0; i < c.size(); ++i) s[i] = g.id_at(c[i]);
    index_[k].emplace(s, static_cast<int>(strata_[k].size()));
    strata_[k].push_back(std::move(s));
  });
}

std::vector<int> CliqueComplex::f_vector() const {
  std::vector<int> f;
  f.reserve(strata_.size());
  for (const auto& s : strata_) f.push_back(static_cast<int>(s.size()));
  return f;
}

long long CliqueComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (const auto& s : strata_) {
    chi += sign * static_cast<long long>(s.size());
    sign = -sign;
  }
  return chi;
}

int CliqueComplex::index_of(const Simplex& s) const {
  size_t k = s.size() - 1;
  if (k >= index_.size()) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

long long euler_characteristic(const SimpleGraph& g) {
  uint64_t all = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
  long long chi = 0;
  std::vector<int> cur;
  struct V {
    long long* chi;
    void operator()(const std::vector<int>& c) const { *chi += (c.size() & 1) ? 1 : -1; }
  };
  extend(g, cur, all, -1, V{&chi});
  return chi;
}

}  // namespace lscat
