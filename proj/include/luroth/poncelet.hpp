#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "luroth/binary_form.hpp"
#include "luroth/point.hpp"
#include "luroth/poly_matrix.hpp"
#include "luroth/ternary_form.hpp"

// Curves of jumping lines of bundles built from a pencil of divisors on a
// smooth conic. Variable conventions: primal plane (x, y, t), dual plane
// (u, v, w), parameter line (s0, s1).
namespace luroth::poncelet {

inline const VarPair kParamVars{"s0", "s1"};
inline const VarTriple kPrimalVars{"x", "y", "t"};
inline const VarTriple kDualVars{"u", "v", "w"};

using ParamPoint = std::pair<Rational, Rational>;

/// A smooth conic given by a quadratic parametrization s -> (p0, p1, p2).
struct ConicParam {
  std::array<BinaryForm, 3> components;
  TernaryForm implicit;  // normalized equation in (x, y, t)
};

/// Throws InputError when the components are not three independent binary
/// quadratics in one pair of variables.
ConicParam make_conic(const BinaryForm& p0, const BinaryForm& p1, const BinaryForm& p2);

/// (s0^2, s1^2, s0*s1), whose image is x*y - t^2 = 0.
ConicParam standard_conic();

/// Two independent binary forms of degree n+1 (n >= 2) on the parameter line.
struct PonceletPencil {
  int n;
  BinaryForm gamma1;
  BinaryForm gamma2;
};

PonceletPencil make_pencil(const BinaryForm& gamma1, const BinaryForm& gamma2);

/// Restriction of the line u*x + v*y + w*t = 0 to the conic: u*p0 + v*p1 + w*p2.
BinaryForm line_pullback(const ConicParam& conic, const DualPoint& line);

/// Coefficients of the pullback of the generic line, as linear forms in (u, v, w).
std::array<TernaryForm, 3> symbolic_pullback(const ConicParam& conic);

/// (n+2)x(n+2) matrix whose rows are indexed by the monomials of degree n+1
/// and whose columns are gamma1, gamma2, then q*s0^(n-1-i)*s1^i for the
/// generic pullback q.
PolyMatrix poncelet_matrix(const ConicParam& conic, const PonceletPencil& pencil);

/// Normalized determinant of poncelet_matrix: the degree-n curve of jumping
/// lines in the dual plane.
TernaryForm poncelet_curve(const ConicParam& conic, const PonceletPencil& pencil);

bool is_base_point_free(const PonceletPencil& pencil);

/// Whether restriction of the pencil to the line (modulo its pullback q) fails
/// to be injective.
bool is_jumping_line(const ConicParam& conic, const PonceletPencil& pencil, const DualPoint& line);

/// The line through the images of two distinct parameter points.
DualPoint chord_dual(const ConicParam& conic, const ParamPoint& a, const ParamPoint& b);

/// Whether the line is tangent to the conic (its pullback is a square).
bool is_tangent_line(const ConicParam& conic, const DualPoint& line);

/// Whether some nonzero member of the pencil is divisible by q^2, q the
/// pullback of the line. Requires a base-point-free pencil and a line on
/// the curve; throws PreconditionError otherwise.
bool singular_jump_criterion(const ConicParam& conic, const PonceletPencil& pencil, const DualPoint& line);

/// The 6x6 matrices of the worked Lüroth examples, over (u, v, w):
/// "eps91" (one-parameter deformation, param = epsilon), "92" (param
/// ignored) and "93" (param = c). Throws InputError for other names.
PolyMatrix family_matrix(std::string_view name, const Rational& param);

}  // namespace luroth::poncelet
