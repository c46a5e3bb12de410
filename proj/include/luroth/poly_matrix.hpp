#pragma once

#include <cstddef>
#include <vector>

#include "luroth/matrix.hpp"
#include "luroth/ternary_form.hpp"

namespace luroth {

/// Rectangular matrix of ternary forms of degree at most 1, all over one
/// variable triple.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, VarTriple vars);
  PolyMatrix(std::size_t rows, std::size_t cols, VarTriple vars, std::vector<TernaryForm> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarTriple& vars() const { return vars_; }

  const TernaryForm& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, TernaryForm entry);

  RationalMatrix evaluate(const std::array<Rational, 3>& point) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  void check_entry(const TernaryForm& e) const;

  std::size_t rows_;
  std::size_t cols_;
  VarTriple vars_;
  std::vector<TernaryForm> entries_;
};

/// Exact determinant without division in Q[u,v,w]. Uses memoized Laplace
/// expansion up to 8x8 and Berkowitz beyond. A nonzero determinant must be
/// homogeneous; a zero one is reported with the sum of the column degrees.
TernaryForm determinant(const PolyMatrix& m);

TernaryForm determinant_laplace(const PolyMatrix& m);
TernaryForm determinant_berkowitz(const PolyMatrix& m);

}  // namespace luroth
