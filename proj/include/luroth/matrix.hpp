#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "luroth/rational.hpp"

namespace luroth {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Rational> operator*(const std::vector<Rational>& x) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Throws PreconditionError when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// A basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // filled only when status == Unique
};

SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace luroth
