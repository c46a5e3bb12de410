#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "luroth/rational.hpp"

namespace luroth {

using VarPair = std::array<std::string, 2>;

/// Homogeneous polynomial of a declared degree in two ordered variables
/// (v0, v1). Coefficient j multiplies v0^(d-j) * v1^j. The zero form keeps
/// its degree so that typed pipelines stay total.
class BinaryForm {
 public:
  BinaryForm(int degree, VarPair vars);
  BinaryForm(VarPair vars, std::vector<Rational> coeffs);

  static BinaryForm monomial(VarPair vars, int e0, int e1, Rational coeff = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const VarPair& vars() const { return vars_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;

  Rational eval(const Rational& a, const Rational& b) const;
  BinaryForm partial(int slot) const;

  /// xi0 * d/dv0 + xi1 * d/dv1, the polarization of the form along xi.
  BinaryForm directional_derivative(const std::pair<Rational, Rational>& xi) const;

  BinaryForm pow(unsigned exponent) const;

  /// The form divided by its first nonzero coefficient (zero stays zero).
  BinaryForm normalized() const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& a);

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  VarPair vars_;
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  bool divides;
  BinaryForm quotient;
};

/// Tests whether divisor^power divides dividend. The quotient is exact when
/// `divides` is true and the zero form of the complementary degree otherwise.
DivisionResult divides(const BinaryForm& divisor, const BinaryForm& dividend, unsigned power = 1);

/// Greatest common divisor, normalized so its first nonzero coefficient is 1.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// Normal form of `form` modulo the ideal generated by `modulus`, expressed
/// as coordinates on the deg(modulus) monomials that are not multiples of
/// the modulus' leading monomial. Linear in `form`; its kernel is exactly
/// modulus * (forms of degree deg(form) - deg(modulus)).
std::vector<Rational> remainder_coordinates(const BinaryForm& form, const BinaryForm& modulus);

/// True when the two forms are proportional by a nonzero scalar.
bool proportional(const BinaryForm& a, const BinaryForm& b);

}  // namespace luroth
