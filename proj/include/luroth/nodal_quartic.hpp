#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "luroth/binary_form.hpp"
#include "luroth/matrix.hpp"
#include "luroth/point.hpp"
#include "luroth/ternary_form.hpp"

namespace luroth::nodal {

/// Local checks at a candidate node O of a plane quartic.
struct NodeReport {
  bool on_curve = false;    // F(O) = 0
  bool singular = false;    // grad F(O) = 0
  bool ordinary = false;    // f2 is a nondegenerate binary quadratic
  bool admissible = false;  // Res(f2, f3) != 0
};

NodeReport verify_node(const TernaryForm& f, const ProjectivePoint& node);

/// F composed with a coordinate change T that sends [0:0:1] to the node,
/// written as t^2*f2 + t*f3 + f4.
///
/// With p the first nonzero coordinate of the node O and (i, j) the other
/// two indices in increasing order, T has columns e_i, e_j, O/O_p. The
/// normalized variables are (x_i, x_j, x_p) of the original triple, so the
/// binary forms f2, f3, f4 live in (x_i, x_j) and t is named x_p.
struct NodeDecomposition {
  RationalMatrix T;
  std::size_t pivot;
  VarTriple original_vars;
  TernaryForm normalized;
  BinaryForm f2;
  BinaryForm f3;
  BinaryForm f4;

  /// G composed with T, in normalized variables.
  TernaryForm to_normalized(const TernaryForm& g) const;
  /// The inverse change: a form in normalized variables pulled back to the
  /// original coordinates.
  TernaryForm to_original(const TernaryForm& g) const;
};

/// Throws PreconditionError unless the node is on the curve, singular and ordinary.
NodeDecomposition normalize_at_node(const TernaryForm& f, const ProjectivePoint& node);

/// The unique (phi, psi) of degrees 1 and 2 with f3*phi + f2*psi = rhs.
/// Throws PreconditionError when the linear system is not uniquely solvable,
/// which happens exactly when f2 and f3 share a factor.
std::pair<BinaryForm, BinaryForm> koszul_solve(const BinaryForm& f2, const BinaryForm& f3, const BinaryForm& rhs);

struct AssociatedConicData {
  BinaryForm phi;
  BinaryForm psi;
  TernaryForm conic;     // t^2 + 2*t*phi - psi, normalized variables
  Rational det3;         // determinant of the symmetric matrix of the conic
  Rational disc_binary;  // discriminant of phi^2 + psi
};

AssociatedConicData associated_conic(const NodeDecomposition& d);

enum class Verdict { TypeII, NotTypeII };

std::string to_string(Verdict v);

struct NodalQuarticAnalysis {
  NodeReport report;
  NodeDecomposition decomposition;
  AssociatedConicData conic_data;
  TernaryForm conic_original;
  BinaryForm residual;  // F(x_i, x_j, -phi) in normalized coordinates
  Verdict verdict;
  std::optional<ProjectivePoint> conic_singular_point;  // original coordinates
};

/// Full pipeline. Throws PreconditionError when the node is not an ordinary,
/// admissible double point.
NodalQuarticAnalysis classify(const TernaryForm& f, const ProjectivePoint& node);

/// F(x_i, x_j, -phi), checked against (phi^2 + psi)*f2. A mismatch is an
/// internal fault and throws std::logic_error.
BinaryForm residual_line_identity(const NodeDecomposition& d, const AssociatedConicData& a);

struct TangentMapResult {
  std::pair<Rational, Rational> xi;
  BinaryForm phi_dot;
  BinaryForm psi_dot;
  TernaryForm conic_velocity;           // 2*t*phi_dot - psi_dot, normalized variables
  TernaryForm conic_velocity_original;  // same, original coordinates
};

/// First-order motion of (phi, psi) along F + e*g. g is a quartic in the
/// original coordinates with g(O) = 0. The node moves by xi, solving
/// d_xi f2 = -g1; then f3*phi_dot + f2*psi_dot =
/// g4 - (g3 + d_xi f4)*phi - (g2 + d_xi f3)*psi.
TangentMapResult tangent_map(const NodeDecomposition& d, const AssociatedConicData& a, const TernaryForm& g);

/// t^2*f2 + t*f3 + (psi*f2 + phi*f3) over (f2's variables, t_name).
/// Throws PreconditionError unless f2 is nondegenerate and coprime to f3.
TernaryForm quartic_from_conic_and_cubic(const BinaryForm& f2, const BinaryForm& f3, const BinaryForm& phi,
                                         const BinaryForm& psi, const std::string& t_name);

}  // namespace luroth::nodal
