#pragma once

#include "luroth/binary_form.hpp"
#include "luroth/matrix.hpp"
#include "luroth/ternary_form.hpp"

namespace luroth {

/// Sylvester matrix: deg(h) shifted rows of g's coefficients, then deg(g)
/// shifted rows of h's coefficients.
RationalMatrix sylvester_matrix(const BinaryForm& g, const BinaryForm& h);

/// det(sylvester_matrix(g, h)); zero iff g and h share a projective root.
Rational sylvester_resultant(const BinaryForm& g, const BinaryForm& h);

/// q^2 - 4pr for p*v0^2 + q*v0*v1 + r*v1^2.
Rational disc_binary_quadratic(const BinaryForm& h);

/// Determinant of the symmetric matrix of a ternary quadratic form.
Rational conic_det3(const TernaryForm& conic);

}  // namespace luroth
