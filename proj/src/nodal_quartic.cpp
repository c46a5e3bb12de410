#include "luroth/nodal_quartic.hpp"

#include <stdexcept>

#include "luroth/errors.hpp"
#include "luroth/resultant.hpp"

namespace luroth::nodal {

namespace {

struct Frame {
  RationalMatrix T;
  std::size_t pivot;
  VarTriple vars;
};

Frame frame_at(const TernaryForm& f, const ProjectivePoint& node) {
  const std::size_t p = node.pivot();
  std::array<std::size_t, 2> others{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != p) others[k++] = i;
  RationalMatrix t(3, 3);
  t(others[0], 0) = Rational(1);
  t(others[1], 1) = Rational(1);
  for (std::size_t i = 0; i < 3; ++i) t(i, 2) = node[i] / node[p];
  const auto& v = f.vars();
  return Frame{t, p, VarTriple{v[others[0]], v[others[1]], v[p]}};
}

bool has_common_factor(const BinaryForm& f2, const BinaryForm& f3) {
  if (f2.is_zero() || f3.is_zero()) return true;
  return sylvester_resultant(f2, f3).is_zero();
}

void require_quartic(const TernaryForm& f, const char* what) {
  if (f.degree() != 4) throw InputError(std::string(what) + " must be a quartic");
}

}  // namespace

NodeReport verify_node(const TernaryForm& f, const ProjectivePoint& node) {
  require_quartic(f, "curve");
  NodeReport r;
  r.on_curve = f.eval(node.coords()).is_zero();
  if (!r.on_curve) return r;
  r.singular = true;
  for (const auto& g : f.gradient()) r.singular = r.singular && g.eval(node.coords()).is_zero();
  if (!r.singular) return r;
  const Frame fr = frame_at(f, node);
  const auto parts = coefficients_in(substitute_linear(f, fr.T).with_vars(fr.vars), 2);
  const BinaryForm& f2 = parts[2];
  r.ordinary = !f2.is_zero() && !disc_binary_quadratic(f2).is_zero();
  r.admissible = r.ordinary && !has_common_factor(f2, parts[1]);
  return r;
}

TernaryForm NodeDecomposition::to_normalized(const TernaryForm& g) const {
  if (g.vars() != original_vars) throw InputError("form is not over the curve's variables");
  return substitute_linear(g, T).with_vars(normalized.vars());
}

TernaryForm NodeDecomposition::to_original(const TernaryForm& g) const {
  if (g.vars() != normalized.vars()) throw InputError("form is not over the normalized variables");
  return substitute_linear(g.with_vars(original_vars), inverse(T));
}

NodeDecomposition normalize_at_node(const TernaryForm& f, const ProjectivePoint& node) {
  const NodeReport r = verify_node(f, node);
  if (!r.on_curve) throw PreconditionError("point " + node.to_string() + " is not on the curve");
  if (!r.singular) throw PreconditionError("point " + node.to_string() + " is not a singular point");
  if (!r.ordinary) throw PreconditionError("singular point " + node.to_string() + " is not an ordinary node");
  const Frame fr = frame_at(f, node);
  TernaryForm normalized = substitute_linear(f, fr.T).with_vars(fr.vars);
  auto parts = coefficients_in(normalized, 2);
  return NodeDecomposition{fr.T, fr.pivot, f.vars(), std::move(normalized), parts[2], parts[1], parts[0]};
}

std::pair<BinaryForm, BinaryForm> koszul_solve(const BinaryForm& f2, const BinaryForm& f3, const BinaryForm& rhs) {
  if (f2.degree() != 2 || f3.degree() != 3 || rhs.degree() != 4)
    throw InputError("koszul system expects forms of degrees 2, 3 and 4");
  const VarPair& vars = f2.vars();
  const std::array<BinaryForm, 5> columns{
      f3 * BinaryForm::monomial(vars, 1, 0), f3 * BinaryForm::monomial(vars, 0, 1),
      f2 * BinaryForm::monomial(vars, 2, 0), f2 * BinaryForm::monomial(vars, 1, 1),
      f2 * BinaryForm::monomial(vars, 0, 2)};
  RationalMatrix a(5, 5);
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t i = 0; i < 5; ++i) a(i, j) = columns[j].coeff(static_cast<int>(i));
  const SolveResult s = solve_linear(a, rhs.coeffs());
  if (s.status != SolveStatus::Unique)
    throw PreconditionError(s.status == SolveStatus::NoSolution
                                ? "f3*phi + f2*psi = f4 has no solution (f2 and f3 share a factor)"
                                : "f3*phi + f2*psi = f4 has no unique solution (f2 and f3 share a factor)");
  const auto& x = s.solution;
  return {BinaryForm(vars, {x[0], x[1]}), BinaryForm(vars, {x[2], x[3], x[4]})};
}

AssociatedConicData associated_conic(const NodeDecomposition& d) {
  auto [phi, psi] = koszul_solve(d.f2, d.f3, d.f4);
  const VarTriple& vars = d.normalized.vars();
  const TernaryForm t = TernaryForm::variable(2, vars);
  const TernaryForm conic = t * t + Rational(2) * t * lift(phi, vars, 0, 1) - lift(psi, vars, 0, 1);
  const Rational det3 = conic_det3(conic);
  const Rational disc = disc_binary_quadratic(phi * phi + psi);
  return AssociatedConicData{std::move(phi), std::move(psi), conic, det3, disc};
}

std::string to_string(Verdict v) { return v == Verdict::TypeII ? "TypeII" : "NotTypeII"; }

BinaryForm residual_line_identity(const NodeDecomposition& d, const AssociatedConicData& a) {
  const VarPair& vars = d.f2.vars();
  const BinaryForm out = substitute_binary(
      d.normalized, {BinaryForm::monomial(vars, 1, 0), BinaryForm::monomial(vars, 0, 1), -a.phi});
  if (out != (a.phi * a.phi + a.psi) * d.f2)
    throw std::logic_error("residual line identity failed: F(x, y, -phi) != (phi^2 + psi) * f2");
  return out;
}

NodalQuarticAnalysis classify(const TernaryForm& f, const ProjectivePoint& node) {
  NodeDecomposition d = normalize_at_node(f, node);
  const NodeReport report = verify_node(f, node);
  if (!report.admissible)
    throw PreconditionError("node " + node.to_string() + " is not admissible: f2 and f3 share a factor");
  AssociatedConicData a = associated_conic(d);
  if (a.det3 != Rational(-1, 4) * a.disc_binary)
    throw std::logic_error("conic determinant disagrees with the binary discriminant");
  BinaryForm residual = residual_line_identity(d, a);
  TernaryForm conic_original = d.to_original(a.conic);
  const Verdict verdict = a.det3.is_zero() ? Verdict::TypeII : Verdict::NotTypeII;
  std::optional<ProjectivePoint> singular_point;
  if (verdict == Verdict::TypeII) {
    const auto kernel = nullspace(symmetric_matrix(conic_original));
    if (kernel.size() == 1) singular_point = ProjectivePoint(kernel[0][0], kernel[0][1], kernel[0][2]);
  }
  return NodalQuarticAnalysis{report,       std::move(d),    std::move(a), std::move(conic_original),
                              std::move(residual), verdict, singular_point};
}

TangentMapResult tangent_map(const NodeDecomposition& d, const AssociatedConicData& a, const TernaryForm& g) {
  require_quartic(g, "perturbation");
  const TernaryForm gn = d.to_normalized(g);
  const auto parts = coefficients_in(gn, 2);
  if (!parts[4].is_zero()) throw PreconditionError("perturbation does not vanish at the node");
  const Rational p = d.f2.coeff(0), q = d.f2.coeff(1), r = d.f2.coeff(2);
  if (disc_binary_quadratic(d.f2).is_zero()) throw PreconditionError("node is not ordinary");

  const BinaryForm& g1 = parts[3];
  const RationalMatrix hessian{{Rational(2) * p, q}, {q, Rational(2) * r}};
  const SolveResult s = solve_linear(hessian, {-g1.coeff(0), -g1.coeff(1)});
  if (s.status != SolveStatus::Unique) throw PreconditionError("node is not ordinary");
  const std::pair<Rational, Rational> xi{s.solution[0], s.solution[1]};

  const BinaryForm rhs = parts[0] - (parts[1] + d.f4.directional_derivative(xi)) * a.phi -
                         (parts[2] + d.f3.directional_derivative(xi)) * a.psi;
  auto [phi_dot, psi_dot] = koszul_solve(d.f2, d.f3, rhs);

  const VarTriple& vars = d.normalized.vars();
  const TernaryForm velocity = Rational(2) * TernaryForm::variable(2, vars) * lift(phi_dot, vars, 0, 1) -
                               lift(psi_dot, vars, 0, 1);
  TernaryForm velocity_original = d.to_original(velocity);
  return TangentMapResult{xi, std::move(phi_dot), std::move(psi_dot), velocity, std::move(velocity_original)};
}

TernaryForm quartic_from_conic_and_cubic(const BinaryForm& f2, const BinaryForm& f3, const BinaryForm& phi,
                                         const BinaryForm& psi, const std::string& t_name) {
  if (f2.degree() != 2 || f3.degree() != 3 || phi.degree() != 1 || psi.degree() != 2)
    throw InputError("expected forms of degrees 2, 3, 1 and 2");
  if (f3.vars() != f2.vars() || phi.vars() != f2.vars() || psi.vars() != f2.vars())
    throw InputError("forms use different variables");
  if (t_name == f2.vars()[0] || t_name == f2.vars()[1]) throw InputError("t variable clashes with f2's variables");
  if (f2.is_zero() || disc_binary_quadratic(f2).is_zero()) throw PreconditionError("f2 is degenerate");
  if (has_common_factor(f2, f3)) throw PreconditionError("f2 and f3 share a factor");
  const VarTriple vars{f2.vars()[0], f2.vars()[1], t_name};
  const TernaryForm t = TernaryForm::variable(2, vars);
  return t * t * lift(f2, vars, 0, 1) + t * lift(f3, vars, 0, 1) + lift(psi * f2 + phi * f3, vars, 0, 1);
}

}  // namespace luroth::nodal
