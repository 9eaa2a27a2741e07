#pragma once

#include <cstddef>
#include <vector>

#include "lscat/rational.hpp"

namespace lscat {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using ZMatrix = std::vector<std::vector<Integer>>;

// Fraction-free Bareiss elimination; exact rank over the integers.
std::size_t bareiss_rank(ZMatrix m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Basis of { x : m x = 0 }.
std::vector<QVector> kernel_basis(const QMatrix& m, std::size_t ncols);

// Incrementally maintained row space in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}
  bool contains(QVector v) const;
  // Inserts v if independent of the current span; returns whether it was new.
  bool insert(QVector v);
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(QVector& v) const;
  std::size_t width_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lscat
