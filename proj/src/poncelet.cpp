#include "luroth/poncelet.hpp"

#include "luroth/errors.hpp"
#include "luroth/matrix.hpp"
#include "luroth/resultant.hpp"

namespace luroth::poncelet {

namespace {

std::array<Rational, 3> image(const ConicParam& conic, const ParamPoint& s) {
  return {conic.components[0].eval(s.first, s.second), conic.components[1].eval(s.first, s.second),
          conic.components[2].eval(s.first, s.second)};
}

RationalMatrix remainder_matrix(const PonceletPencil& pencil, const BinaryForm& modulus) {
  const auto r1 = remainder_coordinates(pencil.gamma1, modulus);
  const auto r2 = remainder_coordinates(pencil.gamma2, modulus);
  RationalMatrix m(2, r1.size());
  for (std::size_t j = 0; j < r1.size(); ++j) {
    m(0, j) = r1[j];
    m(1, j) = r2[j];
  }
  return m;
}

}  // namespace

ConicParam make_conic(const BinaryForm& p0, const BinaryForm& p1, const BinaryForm& p2) {
  const std::array<BinaryForm, 3> p{p0, p1, p2};
  for (const auto& c : p) {
    if (c.degree() != 2) throw InputError("conic parametrization components must be binary quadratics");
    if (c.vars() != p0.vars()) throw InputError("conic parametrization components use different variables");
  }
  RationalMatrix coeffs(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) coeffs(i, j) = p[i].coeff(static_cast<int>(j));
  if (rank(coeffs) != 3) throw InputError("conic parametrization components are linearly dependent");

  // Ternary quadric vanishing on the image: one unknown per monomial of
  // degree 2, one equation per coefficient of the composed binary quartic.
  std::vector<Exponent> monomials;
  for (int a = 2; a >= 0; --a)
    for (int b = 2 - a; b >= 0; --b) monomials.push_back({a, b, 2 - a - b});
  RationalMatrix system(5, monomials.size());
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const Exponent& e = monomials[k];
    const BinaryForm composed = p[0].pow(static_cast<unsigned>(e[0])) * p[1].pow(static_cast<unsigned>(e[1])) *
                                p[2].pow(static_cast<unsigned>(e[2]));
    for (std::size_t j = 0; j < 5; ++j) system(j, k) = composed.coeff(static_cast<int>(j));
  }
  const auto kernel = nullspace(system);
  if (kernel.size() != 1) throw PreconditionError("parametrization does not cut out a unique conic");
  TermMap terms;
  for (std::size_t k = 0; k < monomials.size(); ++k) terms.emplace(monomials[k], kernel[0][k]);
  return ConicParam{p, TernaryForm(2, kPrimalVars, std::move(terms)).normalized()};
}

ConicParam standard_conic() {
  return make_conic(BinaryForm::monomial(kParamVars, 2, 0), BinaryForm::monomial(kParamVars, 0, 2),
                    BinaryForm::monomial(kParamVars, 1, 1));
}

PonceletPencil make_pencil(const BinaryForm& gamma1, const BinaryForm& gamma2) {
  if (gamma1.vars() != gamma2.vars()) throw InputError("pencil generators use different variables");
  if (gamma1.degree() != gamma2.degree()) throw InputError("pencil generators must have equal degree");
  const int n = gamma1.degree() - 1;
  if (n < 2) throw InputError("pencil generators must have degree at least 3");
  if (gamma1.is_zero() || gamma2.is_zero() || proportional(gamma1, gamma2))
    throw InputError("pencil generators are linearly dependent");
  return PonceletPencil{n, gamma1, gamma2};
}

BinaryForm line_pullback(const ConicParam& conic, const DualPoint& line) {
  return line[0] * conic.components[0] + line[1] * conic.components[1] + line[2] * conic.components[2];
}

std::array<TernaryForm, 3> symbolic_pullback(const ConicParam& conic) {
  std::array<TernaryForm, 3> q{TernaryForm(1, kDualVars), TernaryForm(1, kDualVars), TernaryForm(1, kDualVars)};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      q[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j)] +
          conic.components[static_cast<std::size_t>(k)].coeff(j) * TernaryForm::variable(k, kDualVars);
  return q;
}

PolyMatrix poncelet_matrix(const ConicParam& conic, const PonceletPencil& pencil) {
  if (pencil.gamma1.vars() != conic.components[0].vars())
    throw InputError("pencil and conic parametrization use different variables");
  const auto n = static_cast<std::size_t>(pencil.n);
  if (pencil.gamma1.degree() != pencil.n + 1 || pencil.gamma2.degree() != pencil.n + 1)
    throw InputError("pencil degree does not match n + 1");
  const std::size_t size = n + 2;
  PolyMatrix m(size, size, kDualVars);
  for (std::size_t r = 0; r < size; ++r) {
    m.set(r, 0, TernaryForm::constant(pencil.gamma1.coeff(static_cast<int>(r)), kDualVars));
    m.set(r, 1, TernaryForm::constant(pencil.gamma2.coeff(static_cast<int>(r)), kDualVars));
  }
  const auto q = symbolic_pullback(conic);
  // q * s0^(n-1-i) * s1^i shifts q's coefficients down by i rows.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i + j, 2 + i, q[j]);
  return m;
}

TernaryForm poncelet_curve(const ConicParam& conic, const PonceletPencil& pencil) {
  const TernaryForm det = determinant(poncelet_matrix(conic, pencil));
  if (det.is_zero()) throw PreconditionError("degenerate pencil: the jumping-line determinant vanishes identically");
  return det.normalized();
}

bool is_base_point_free(const PonceletPencil& pencil) {
  return !sylvester_resultant(pencil.gamma1, pencil.gamma2).is_zero();
}

bool is_jumping_line(const ConicParam& conic, const PonceletPencil& pencil, const DualPoint& line) {
  const BinaryForm q = line_pullback(conic, line);
  return determinant(remainder_matrix(pencil, q)).is_zero();
}

DualPoint chord_dual(const ConicParam& conic, const ParamPoint& a, const ParamPoint& b) {
  if ((a.first.is_zero() && a.second.is_zero()) || (b.first.is_zero() && b.second.is_zero()))
    throw InputError("parameter point with both coordinates zero");
  if (a.first * b.second == a.second * b.first)
    throw PreconditionError("chord through a repeated parameter point is a tangent line");
  const auto p = image(conic, a);
  const auto q = image(conic, b);
  return DualPoint(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
}

bool is_tangent_line(const ConicParam& conic, const DualPoint& line) {
  return disc_binary_quadratic(line_pullback(conic, line)).is_zero();
}

bool singular_jump_criterion(const ConicParam& conic, const PonceletPencil& pencil, const DualPoint& line) {
  if (!is_base_point_free(pencil)) throw PreconditionError("pencil has a base point");
  if (!is_jumping_line(conic, pencil, line)) throw PreconditionError("line " + line.to_string() + " is not a jumping line");
  const BinaryForm q = line_pullback(conic, line);
  return rank(remainder_matrix(pencil, q * q)) < 2;
}

}  // namespace luroth::poncelet
