#include "cliffcent/linalg.hpp"

#include <stdexcept>

namespace cliffcent {

namespace {

// a - factor * b, both sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool RowEchelon::add_row(SparseRow row) {
  while (!row.empty()) {
    if (row.front().first >= cols_) throw std::out_of_range("sparse row column out of range");
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const Rational lead = row.front().second;
    row = axpy(row, lead, it->second);
  }
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  for (auto& [col, value] : row) value /= lead;
  pivots_.emplace(row.front().first, std::move(row));
  return true;
}

void RowEchelon::add_dense_row(const std::vector<Rational>& row) {
  SparseRow sparse;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!is_zero(row[j])) sparse.emplace_back(j, row[j]);
  add_row(std::move(sparse));
}

std::vector<std::vector<Rational>> RowEchelon::nullspace_basis() const {
  // Back-substitute into reduced row echelon form, highest pivot first.
  std::map<std::size_t, SparseRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto found = reduced.find(row[k].first);
        if (found != reduced.end()) {
          const Rational factor = row[k].second;
          row = axpy(row, factor, found->second);
          changed = true;
          break;
        }
      }
    }
    reduced.emplace(it->first, std::move(row));
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (reduced.count(free)) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (const auto& [pivot, row] : reduced)
      for (const auto& [col, value] : row)
        if (col == free) v[pivot] = -value;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) row.emplace_back(j, m.at(i, j));
    ech.add_row(std::move(row));
  }
  return ech.rank();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) row.emplace_back(j, m.at(i, j));
    ech.add_row(std::move(row));
  }
  return ech.nullspace_basis();
}

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_unique needs a square system");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(aug.at(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug.at(pivot, j), aug.at(col, j));
    const Rational inv = 1 / aug.at(col, col);
    for (std::size_t j = col; j <= n; ++j) aug.at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(aug.at(i, col))) continue;
      const Rational factor = aug.at(i, col);
      for (std::size_t j = col; j <= n; ++j) aug.at(i, j) -= factor * aug.at(col, j);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

}  // namespace cliffcent
