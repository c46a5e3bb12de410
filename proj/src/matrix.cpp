#include "luroth/matrix.hpp"

#include <utility>

#include "luroth/errors.hpp"

namespace luroth {

namespace {

struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;
};

// Reduced row echelon form, optionally stopping pivot search at `limit` columns.
Echelon rref(RationalMatrix m, std::size_t limit) {
  Echelon out{m, {}, 0};
  RationalMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
      ++out.swaps;
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::size_t rank(const RationalMatrix& m) { return rref(m, m.cols()).pivot_cols.size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  const Echelon e = rref(aug, n);
  if (e.pivot_cols.size() != n) throw PreconditionError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const Echelon e = rref(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side has the wrong length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(aug, a.cols());
  // Inconsistent iff some zero row of A has a nonzero right-hand side.
  for (std::size_t r = e.pivot_cols.size(); r < a.rows(); ++r)
    if (!e.reduced(r, a.cols()).is_zero()) return {SolveStatus::NoSolution, {}};
  if (e.pivot_cols.size() < a.cols()) return {SolveStatus::NonUnique, {}};
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, a.cols());
  return {SolveStatus::Unique, x};
}

}  // namespace luroth
