#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "luroth/binary_form.hpp"
#include "luroth/matrix.hpp"
#include "luroth/rational.hpp"

namespace luroth {

using VarTriple = std::array<std::string, 3>;
using Exponent = std::array<int, 3>;

// Descending lexicographic order on exponents: for a fixed total degree this
// is the graded-lex order used for canonical output.
using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

/// Homogeneous polynomial in three ordered variables. Stores no zero
/// coefficients; the zero form keeps its declared degree.
class TernaryForm {
 public:
  TernaryForm(int degree, VarTriple vars);
  TernaryForm(int degree, VarTriple vars, TermMap terms);

  static TernaryForm constant(const Rational& c, VarTriple vars);
  static TernaryForm variable(int slot, VarTriple vars);
  static TernaryForm monomial(const Exponent& e, const Rational& c, VarTriple vars);

  int degree() const { return degree_; }
  const VarTriple& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  bool is_zero() const { return terms_.empty(); }

  Rational eval(const std::array<Rational, 3>& point) const;
  TernaryForm partial(int slot) const;
  std::array<TernaryForm, 3> gradient() const;
  TernaryForm pow(unsigned exponent) const;

  /// Scaled so that the coefficient of the first monomial in canonical
  /// order is 1. Curves are compared through this normalization.
  TernaryForm normalized() const;

  TernaryForm with_vars(VarTriple vars) const;

  TernaryForm operator-() const;
  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const Rational& c, const TernaryForm& a);

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  int degree_;
  VarTriple vars_;
  TermMap terms_;
};

/// The same polynomial written over a permutation of its variable names.
TernaryForm reorder_vars(const TernaryForm& f, const VarTriple& target);

bool equal_up_to_scalar(const TernaryForm& a, const TernaryForm& b);

/// F(T x): every variable x_i is replaced by sum_j T(i, j) x_j.
/// Throws PreconditionError if T is singular.
TernaryForm substitute_linear(const TernaryForm& f, const RationalMatrix& t);

/// F(l0, l1, l2) for binary forms l_i of a common degree.
BinaryForm substitute_binary(const TernaryForm& f, const std::array<BinaryForm, 3>& l);

/// Coefficients of F as a polynomial in the variable at `slot`: entry i is
/// the coefficient of x_slot^i, a binary form in the remaining two
/// variables (kept in their original order).
std::vector<BinaryForm> coefficients_in(const TernaryForm& f, int slot);

/// Embeds a binary form whose variables are vars[a], vars[b].
TernaryForm lift(const BinaryForm& f, const VarTriple& vars, int slot0, int slot1);

/// 3x3 symmetric matrix of a quadratic form (off-diagonal entries are half
/// the mixed coefficients).
RationalMatrix symmetric_matrix(const TernaryForm& conic);

}  // namespace luroth
