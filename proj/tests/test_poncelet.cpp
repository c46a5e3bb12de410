#include <doctest.h>

#include "helpers.hpp"
#include "luroth/errors.hpp"
#include "luroth/poncelet.hpp"

using namespace luroth;
using namespace luroth::poncelet;
using test::bin;
using test::uvw;
using test::xyt;

namespace {

BinaryForm s(std::string_view text) { return bin(text, kParamVars); }

// h(a*s0 + b*s1, c*s0 + d*s1).
BinaryForm reparametrize(const BinaryForm& h, const RationalMatrix& m) {
  const BinaryForm l0(kParamVars, {m(0, 0), m(0, 1)});
  const BinaryForm l1(kParamVars, {m(1, 0), m(1, 1)});
  BinaryForm out(h.degree(), kParamVars);
  for (int j = 0; j <= h.degree(); ++j)
    out = out + h.coeff(j) * (l0.pow(static_cast<unsigned>(h.degree() - j)) * l1.pow(static_cast<unsigned>(j)));
  return out;
}

bool vanishes_at(const TernaryForm& f, const DualPoint& p) { return f.eval(p.coords()).is_zero(); }

bool singular_at(const TernaryForm& f, const DualPoint& p) {
  for (const auto& g : f.gradient())
    if (!g.eval(p.coords()).is_zero()) return false;
  return true;
}

PonceletPencil pencil_92() { return make_pencil(s("s0^2*s1^2*(s1-s0)"), s("-(s0^5+s1^5)")); }

const TernaryForm kQuartic92 = uvw("w^2*(u^2+v^2) + w*(u^3+v^3) - u*v*(u^2+v^2)");

}  // namespace

TEST_CASE("make_conic") {
  const ConicParam c = standard_conic();
  CHECK(c.implicit == xyt("x*y - t^2"));
  CHECK(substitute_binary(c.implicit, c.components).is_zero());
  CHECK_THROWS_AS(make_conic(s("s0^2"), s("s1^2"), s("s0^2")), InputError);
  CHECK_THROWS_AS(make_conic(s("s0^2"), s("s1^2"), s("s0")), InputError);

  test::Rng rng(21);
  for (int i = 0; i < 5; ++i) {
    const RationalMatrix a = rng.invertible(2);
    const ConicParam r = make_conic(reparametrize(c.components[0], a), reparametrize(c.components[1], a),
                                    reparametrize(c.components[2], a));
    CHECK(equal_up_to_scalar(r.implicit, c.implicit));
  }
}

TEST_CASE("line pullback") {
  const ConicParam c = standard_conic();
  CHECK(line_pullback(c, DualPoint(1, 0, 0)) == s("s0^2"));
  CHECK(line_pullback(c, DualPoint(0, 0, 1)) == s("s0*s1"));
  const auto q = symbolic_pullback(c);
  CHECK(q[0] == uvw("u"));
  CHECK(q[1] == uvw("w"));
  CHECK(q[2] == uvw("v"));
  CHECK(is_tangent_line(c, DualPoint(1, 0, 0)));
  CHECK(!is_tangent_line(c, DualPoint(0, 0, 1)));
}

TEST_CASE("Poncelet matrix layout") {
  const PolyMatrix m = poncelet_matrix(standard_conic(), make_pencil(s("s0^3"), s("s1^3")));
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 4);
  const TernaryForm one = TernaryForm::constant(1, kDualVars);
  CHECK(m.at(0, 0) == one);
  CHECK(m.at(3, 1) == one);
  CHECK(m.at(1, 0).is_zero());
  CHECK(m.at(0, 2) == uvw("u"));
  CHECK(m.at(1, 2) == uvw("w"));
  CHECK(m.at(2, 2) == uvw("v"));
  CHECK(m.at(3, 2).is_zero());
  CHECK(m.at(0, 3).is_zero());
  CHECK(m.at(1, 3) == uvw("u"));
  CHECK(m.at(3, 3) == uvw("v"));

  const PolyMatrix m4 = poncelet_matrix(standard_conic(), pencil_92());
  CHECK(m4.rows() == 6);
  CHECK(m4.cols() == 6);
  int linear = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (m4.at(i, j).degree() == 1 && !m4.at(i, j).is_zero()) ++linear;
  CHECK(linear == 12);
}

TEST_CASE("pencil validation") {
  CHECK_THROWS_AS(make_pencil(s("s0^3"), s("2*s0^3")), InputError);
  CHECK_THROWS_AS(make_pencil(s("s0^3"), s("s1^4")), InputError);
  CHECK_THROWS_AS(make_pencil(s("s0^2"), s("s1^2")), InputError);
  CHECK_THROWS_AS(make_pencil(s("s0^3"), BinaryForm(3, kParamVars)), InputError);
}

TEST_CASE("curve of the worked quintic pencil") {
  const TernaryForm curve = poncelet_curve(standard_conic(), pencil_92());
  CHECK(curve.degree() == 4);
  CHECK(equal_up_to_scalar(curve, kQuartic92));
  CHECK(equal_up_to_scalar(curve, determinant(family_matrix("92", 0))));
}

TEST_CASE("curve degree equals n") {
  test::Rng rng(22);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 3;) {
      const BinaryForm g1 = rng.binary(n + 1, kParamVars);
      const BinaryForm g2 = rng.binary(n + 1, kParamVars);
      if (g1.is_zero() || g2.is_zero() || proportional(g1, g2)) continue;
      const PonceletPencil p = make_pencil(g1, g2);
      if (!is_base_point_free(p)) continue;
      const TernaryForm curve = poncelet_curve(standard_conic(), p);
      CHECK(curve.degree() == n);
      CHECK(!curve.is_zero());
      ++k;
    }
  }
}

TEST_CASE("base point splits off the dual line") {
  test::Rng rng(23);
  for (int i = 0; i < 5; ++i) {
    const BinaryForm d1 = rng.binary(3, kParamVars);
    const BinaryForm d2 = rng.binary(3, kParamVars);
    if (d1.is_zero() || d2.is_zero() || proportional(d1, d2)) continue;
    const PonceletPencil p = make_pencil(s("s0 - s1") * d1, s("s0 - s1") * d2);
    CHECK(!is_base_point_free(p));
    const TernaryForm curve = poncelet_curve(standard_conic(), p);
    // rho(1,1) = (1,1,1); lines through it form u + v + w = 0.
    const BinaryForm restricted = substitute_binary(
        curve, {s("s0"), s("s1"), s("-s0 - s1")});
    CHECK(restricted.is_zero());
  }
}

TEST_CASE("base-point freeness") {
  CHECK(is_base_point_free(make_pencil(s("s0^5"), s("s1^5"))));
  CHECK(!is_base_point_free(make_pencil(s("(s0-s1)*s0^4"), s("(s0-s1)*s1^4"))));
  CHECK(is_base_point_free(pencil_92()));
}

TEST_CASE("chord duals") {
  const ConicParam c = standard_conic();
  CHECK(chord_dual(c, {1, 0}, {0, 1}) == DualPoint(0, 0, 1));
  CHECK(chord_dual(c, {1, 1}, {1, -1}) == DualPoint(1, -1, 0));
  CHECK_THROWS_AS(chord_dual(c, {1, 2}, {2, 4}), PreconditionError);
  CHECK_THROWS_AS(chord_dual(c, {0, 0}, {1, 4}), InputError);
}

TEST_CASE("jumping lines are the curve") {
  test::Rng rng(24);
  const ConicParam c = standard_conic();
  const PonceletPencil p = make_pencil(s("s0*(s0-s1)*(s0+2*s1)*(2*s0-s1)"), s("s0^4 + 3*s0*s1^3 - s1^4"));
  const TernaryForm curve = poncelet_curve(c, p);
  const std::vector<ParamPoint> roots{{0, 1}, {1, 1}, {-2, 1}, {1, 2}};
  int on = 0;
  for (int i = 0; i < 200; ++i) {
    DualPoint l(1, 0, 0);
    if (i % 2 == 0) {
      const auto a = roots[static_cast<std::size_t>(rng.integer(0, 3))];
      auto b = roots[static_cast<std::size_t>(rng.integer(0, 3))];
      if (a == b) b = {rng.integer(2, 9), 1};
      l = chord_dual(c, a, b);
    } else {
      const Rational x = rng.integer(-5, 5), y = rng.integer(-5, 5), z = rng.integer(1, 5);
      l = DualPoint(x, y, z);
    }
    const bool jumping = is_jumping_line(c, p, l);
    CHECK(jumping == vanishes_at(curve, l));
    on += jumping ? 1 : 0;
  }
  CHECK(on >= 30);
  CHECK(on <= 170);
}

TEST_CASE("singular-jump criterion") {
  const ConicParam c = standard_conic();
  SUBCASE("constructed square factor") {
    const DualPoint l(2, 3, -1);
    const BinaryForm q0 = line_pullback(c, l);
    const PonceletPencil p = make_pencil(q0 * q0 * s("s0 + s1"), s("s0^5 - 2*s1^5 + s0*s1^4"));
    REQUIRE(is_base_point_free(p));
    CHECK(singular_jump_criterion(c, p, l));
    CHECK(singular_at(poncelet_curve(c, p), l));
  }
  SUBCASE("worked quintic pencil") {
    const TernaryForm curve = poncelet_curve(c, pencil_92());
    // The node of this quartic is [0,0,1].
    CHECK(singular_jump_criterion(c, pencil_92(), DualPoint(0, 0, 1)));
    CHECK(singular_at(curve, DualPoint(0, 0, 1)));
    // [1,0,0] is a smooth point of the curve whose line is tangent to the conic.
    CHECK(vanishes_at(curve, DualPoint(1, 0, 0)));
    CHECK(!singular_at(curve, DualPoint(1, 0, 0)));
    CHECK(is_tangent_line(c, DualPoint(1, 0, 0)));
    CHECK(!singular_jump_criterion(c, pencil_92(), DualPoint(1, 0, 0)));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(singular_jump_criterion(c, pencil_92(), DualPoint(1, 1, 1)), PreconditionError);
    const PonceletPencil bp = make_pencil(s("(s0-s1)*s0^4"), s("(s0-s1)*s1^4"));
    CHECK_THROWS_AS(singular_jump_criterion(c, bp, DualPoint(0, 0, 1)), PreconditionError);
  }
}

TEST_CASE("reparametrization leaves the curve unchanged") {
  test::Rng rng(25);
  const ConicParam c = standard_conic();
  const PonceletPencil p = pencil_92();
  const TernaryForm curve = poncelet_curve(c, p);
  for (int i = 0; i < 5; ++i) {
    const RationalMatrix a = rng.invertible(2);
    const ConicParam rc = make_conic(reparametrize(c.components[0], a), reparametrize(c.components[1], a),
                                     reparametrize(c.components[2], a));
    const PonceletPencil rp = make_pencil(reparametrize(p.gamma1, a), reparametrize(p.gamma2, a));
    CHECK(equal_up_to_scalar(poncelet_curve(rc, rp), curve));
  }
}

TEST_CASE("worked family matrices") {
  const PolyMatrix e = family_matrix("eps91", Rational(3, 5));
  CHECK(e.at(2, 2) == Rational(3, 5) * uvw("u"));
  CHECK(e.at(5, 3) == Rational(-3, 5) * uvw("u"));
  CHECK(e.at(5, 4) == Rational(3, 5) * uvw("v"));
  CHECK(e.at(4, 0) == TernaryForm::constant(2, kDualVars));

  const TernaryForm d0 = determinant(family_matrix("eps91", 0));
  const TernaryForm q0 = uvw("(u^2+w^2)*(v^2+w^2) + 2*u*v^3");
  CHECK((d0 == q0 || d0 == -q0));

  for (const Rational c : {Rational(0), Rational(2), Rational(-1, 4), Rational(1, 3), Rational(5)}) {
    const TernaryForm expected = uvw("w^2*(u^2+v^2) + w*(u^3+v^3) - u^3*v - u*v^3") - Rational(2) * c * uvw("u^2*v^2");
    const TernaryForm d = determinant(family_matrix("93", c));
    CHECK((d == expected || d == -expected));
  }
  CHECK(family_matrix("92", 7) == family_matrix("92", 0));
  CHECK_THROWS_AS(family_matrix("91", 0), InputError);
}
