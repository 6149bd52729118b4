#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cliffcent/rational.hpp"

namespace cliffcent {

// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Sorted (column, value) pairs with no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental Gaussian elimination over the rationals. Rows are reduced against
// the current pivots as they arrive, so long streams of dependent rows stay cheap.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row increased the rank.
  bool add_row(SparseRow row);
  void add_dense_row(const std::vector<Rational>& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  // Basis of {x : A x = 0}; one vector per free column, with a 1 in that column.
  std::vector<std::vector<Rational>> nullspace_basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row with leading 1 there
};

std::size_t rank(const RationalMatrix& m);
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Unique solution of A x = b for square A, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace cliffcent
