#include "lscat/linalg.hpp"

#include <utility>

namespace lscat {

std::size_t bareiss_rank(ZMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> kernel_basis(const QMatrix& m, std::size_t ncols) {
  QMatrix a = m;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    QVector v(ncols, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(QVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& x = v[pivots_[r]];
    if (x == 0) continue;
    Rational f = x;
    for (std::size_t j = pivots_[r]; j < width_; ++j) v[j] -= f * rows_[r][j];
  }
}

bool RowSpace::contains(QVector v) const {
  reduce(v);
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

bool RowSpace::insert(QVector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  Rational inv = v[p];
  for (std::size_t j = p; j < width_; ++j) v[j] /= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][p];
    if (f == 0) continue;
    for (std::size_t j = p; j < width_; ++j) rows_[r][j] -= f * v[j];
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(at), p);
  return true;
}

}  // namespace lscat
