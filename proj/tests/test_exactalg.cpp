#include <doctest.h>

#include "helpers.hpp"
#include "luroth/errors.hpp"
#include "luroth/poly_matrix.hpp"
#include "luroth/resultant.hpp"

using namespace luroth;
using test::bin;
using test::uvw;
using test::xyt;

TEST_CASE("rational numbers stay reduced") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("+12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(Rational(-1, 3) < Rational(1, 4));
}

TEST_CASE("parse conic over x, y, t") {
  const TernaryForm c = xyt("x*y - t^2");
  CHECK(c.degree() == 2);
  CHECK(c.terms().size() == 2);
  CHECK(c.coeff({1, 1, 0}) == Rational(1));
  CHECK(c.coeff({0, 0, 2}) == Rational(-1));
}

TEST_CASE("parse a product of sums") {
  const TernaryForm f = uvw("(u^2+w^2)*(v^2+w^2)+2*u*v^3");
  CHECK(f.degree() == 4);
  CHECK(f.terms().size() == 5);
  CHECK(f == uvw("u^2*v^2 + u^2*w^2 + 2*u*v^3 + v^2*w^2 + w^4"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(uvw("u + v^2"), InputError);
  CHECK_THROWS_AS(uvw("u + z"), ParseError);
  try {
    uvw("u*v + * w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(uvw("(u + v"), ParseError);
  CHECK_THROWS_AS(parse_ternary("u^2", test::kUVW, 3), InputError);
}

TEST_CASE("canonical text round-trips") {
  const TernaryForm f = uvw("-3/4*u^2*w + 5*v^3 - u*v*w");
  const std::string text = to_string(f);
  CHECK(text == "-3/4*u^2*w - u*v*w + 5*v^3");
  CHECK(uvw(text) == f);
  CHECK(to_string(TernaryForm(3, test::kUVW)) == "0");
  CHECK(to_string(bin("2*v^2 - v*w", test::kVW)) == "2*v^2 - v*w");
}

TEST_CASE("JSON round-trips") {
  const TernaryForm f = uvw("-3/4*u^2*w + 5*v^3");
  const auto j = to_json(f);
  CHECK(j["terms"][0]["coef"] == "-3/4");
  CHECK(std::get<TernaryForm>(form_from_json(j)) == f);
  const BinaryForm b = bin("v^2 - 7/2*w^2", test::kVW);
  CHECK(std::get<BinaryForm>(form_from_json(to_json(b))) == b);
  auto bad = j;
  bad["degree"] = 2;
  CHECK_THROWS_AS(form_from_json(bad), InputError);
}

TEST_CASE("ring operations") {
  const TernaryForm c = xyt("x*y - t^2");
  CHECK(c * TernaryForm::constant(1, test::kXYT) == c);
  CHECK(uvw("u^2+w^2").eval({1, 0, 0}) == Rational(1));
  CHECK_THROWS_AS(uvw("u^2") + uvw("u"), InputError);
  CHECK_THROWS_AS(uvw("u") + xyt("x"), InputError);

  // d/dt of t^2 f2 + t f3 + f4 is 2 t f2 + f3.
  const TernaryForm f = xyt("t^2*(x^2+y^2) + t*2*x^3 + y^2*(x^2+y^2)");
  CHECK(f.partial(2) == xyt("2*t*(x^2+y^2) + 2*x^3"));
  CHECK((c * c).degree() == 4);
}

TEST_CASE("directional derivative") {
  const BinaryForm f2 = bin("v^2 + w^2", test::kVW);
  CHECK(f2.directional_derivative({Rational(3), Rational(-5)}) == bin("6*v - 10*w", test::kVW));
  CHECK(bin("2*v^3", test::kVW).directional_derivative({Rational(-1, 2), Rational(0)}) == bin("-3*v^2", test::kVW));
  CHECK(f2.directional_derivative({Rational(0), Rational(0)}).is_zero());
  CHECK_THROWS_AS(BinaryForm::monomial(test::kVW, 0, 0).directional_derivative({1, 1}), InputError);
}

TEST_CASE("linear substitution") {
  const TernaryForm c = xyt("x*y - t^2");
  CHECK(substitute_linear(c, RationalMatrix::identity(3)) == c);
  const RationalMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(substitute_linear(c, swap) == c);
  const RationalMatrix singular{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(substitute_linear(c, singular), PreconditionError);

  test::Rng rng(11);
  const TernaryForm q = uvw("u^2 - w^2");
  for (int i = 0; i < 10; ++i) {
    const RationalMatrix t = rng.invertible();
    CHECK(substitute_linear(substitute_linear(q, t), inverse(t)) == q);
  }
}

TEST_CASE("reorder variables by name") {
  const TernaryForm g = parse_ternary("v^2*u + 3*w*u^2", {"v", "w", "u"});
  CHECK(reorder_vars(g, test::kUVW) == uvw("u*v^2 + 3*u^2*w"));
  CHECK_THROWS_AS(reorder_vars(g, test::kXYT), InputError);
}

namespace {

TernaryForm sum(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return a + b;
}

TernaryForm naive_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  TernaryForm acc(0, m.vars());
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1, m.vars());
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.set(r - 1, cc++, m.at(r, c));
    const TernaryForm term = m.at(0, j) * naive_det(minor);
    acc = sum(acc, j % 2 == 1 ? -term : term);
  }
  return acc;
}

PolyMatrix random_linear(test::Rng& rng, std::size_t n, std::size_t constant_cols) {
  PolyMatrix m(n, n, test::kUVW);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, j < constant_cols ? TernaryForm::constant(rng.integer(-3, 3), test::kUVW) : rng.ternary(1, test::kUVW, 3));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  PolyMatrix id(3, 3, test::kUVW);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, TernaryForm::constant(1, test::kUVW));
  CHECK(determinant(id) == TernaryForm::constant(1, test::kUVW));

  const PolyMatrix diag(2, 2, test::kUVW, {uvw("v"), TernaryForm(1, test::kUVW), TernaryForm(1, test::kUVW), uvw("w")});
  CHECK(determinant(diag) == uvw("v*w"));

  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, test::kUVW)), InputError);
  CHECK_THROWS_AS(PolyMatrix(1, 1, test::kUVW, {uvw("u^2")}), InputError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  test::Rng rng(12);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t constants = 0; constants <= n; ++constants) {
      const PolyMatrix m = random_linear(rng, n, constants);
      const TernaryForm expected = naive_det(m);
      const TernaryForm got = determinant(m);
      if (expected.is_zero()) {
        CHECK(got.is_zero());
      } else {
        CHECK(got == expected);
      }
      CHECK(determinant_berkowitz(m).terms() == got.terms());
    }
}

TEST_CASE("Laplace and Berkowitz agree beyond the memoized range") {
  test::Rng rng(13);
  const PolyMatrix m = random_linear(rng, 9, 5);
  const TernaryForm a = determinant_laplace(m);
  CHECK(a.degree() == 4);
  CHECK(determinant_berkowitz(m) == a);
  CHECK(determinant(m) == a);
}

TEST_CASE("determinant evaluates like the numeric determinant") {
  test::Rng rng(14);
  const PolyMatrix m = random_linear(rng, 5, 2);
  const TernaryForm d = determinant(m);
  for (int i = 0; i < 5; ++i) {
    const std::array<Rational, 3> p{rng.rational(), rng.rational(), rng.rational()};
    CHECK(d.eval(p) == determinant(m.evaluate(p)));
  }
}

TEST_CASE("Sylvester resultant") {
  CHECK(sylvester_resultant(bin("v^2", test::kVW), bin("w^2", test::kVW)) == Rational(1));
  CHECK(sylvester_resultant(bin("v*w", test::kVW), bin("v^2", test::kVW)).is_zero());
  CHECK(!sylvester_resultant(bin("v^2+w^2", test::kVW), bin("2*v^3", test::kVW)).is_zero());
  CHECK_THROWS_AS(sylvester_resultant(BinaryForm(2, test::kVW), bin("v", test::kVW)), InputError);

  // g rows come first, which fixes the sign.
  const RationalMatrix s = sylvester_matrix(bin("v - 2*w", test::kVW), bin("v - 5*w", test::kVW));
  CHECK(s == RationalMatrix{{1, -2}, {1, -5}});
  CHECK(sylvester_resultant(bin("v - 2*w", test::kVW), bin("v - 5*w", test::kVW)) == Rational(-3));
}

TEST_CASE("binary discriminant") {
  CHECK(disc_binary_quadratic(bin("w^2", test::kVW)).is_zero());
  CHECK(disc_binary_quadratic(bin("-u*v", test::kUV)) == Rational(1));
  CHECK_THROWS_AS(disc_binary_quadratic(bin("v^3", test::kVW)), InputError);
  for (const Rational c : {Rational(0), Rational(2), Rational(-1, 4), Rational(1, 3), Rational(5)}) {
    const BinaryForm h(test::kUV, {c * c - c, Rational(2) * c * c - c - Rational(1), c * c - c});
    CHECK(disc_binary_quadratic(h) == (Rational(4) * c + Rational(1)) * (c - Rational(1)) * (c - Rational(1)));
  }
}

TEST_CASE("conic determinant") {
  CHECK(conic_det3(uvw("u^2 - w^2")).is_zero());
  CHECK(conic_det3(uvw("w^2 + u*v")) == Rational(-1, 4));
  CHECK(symmetric_matrix(uvw("w^2 + u*v")) ==
        RationalMatrix{{0, Rational(1, 2), 0}, {Rational(1, 2), 0, 0}, {0, 0, 1}});
  // At c = -1/4: t^2 + 2t*phi - psi with phi = c(u+v), psi = -(c u^2 + (1+c) uv + c v^2).
  const TernaryForm conic = uvw("w^2 - 1/2*w*u - 1/2*w*v - 1/4*u^2 + 3/4*u*v - 1/4*v^2");
  CHECK(conic_det3(conic).is_zero());
  CHECK_THROWS_AS(conic_det3(uvw("u^3")), InputError);
}

TEST_CASE("exact linear solve") {
  const RationalMatrix id = RationalMatrix::identity(3);
  const SolveResult r = solve_linear(id, {1, Rational(2, 3), -4});
  REQUIRE(r.status == SolveStatus::Unique);
  CHECK(r.solution == std::vector<Rational>{1, Rational(2, 3), -4});

  const RationalMatrix singular{{1, 2}, {2, 4}};
  CHECK(solve_linear(singular, {1, 2}).status == SolveStatus::NonUnique);
  CHECK(solve_linear(singular, {1, 3}).status == SolveStatus::NoSolution);

  const RationalMatrix a{{2, 1}, {1, 3}};
  const SolveResult s = solve_linear(a, {3, 5});
  REQUIRE(s.status == SolveStatus::Unique);
  CHECK(a * s.solution == std::vector<Rational>{3, 5});
}

TEST_CASE("matrix helpers") {
  const RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(determinant(a) == Rational(-2));
  CHECK(a * inverse(a) == RationalMatrix::identity(2));
  CHECK(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  const auto k = nullspace(RationalMatrix{{1, 2, 3}, {2, 4, 6}});
  CHECK(k.size() == 2);
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), PreconditionError);
}

TEST_CASE("divisibility of binary forms") {
  const BinaryForm q = bin("v^2 + 3*v*w - w^2", test::kVW);
  const BinaryForm h = bin("2*v - 7*w", test::kVW);
  const DivisionResult r = divides(q, q * q * h, 2);
  CHECK(r.divides);
  CHECK(r.quotient == h);

  const BinaryForm vw = bin("v*w", test::kVW);
  CHECK(!divides(vw, bin("v^2*w*(v^2 + 3*v*w + 2*w^2)", test::kVW), 2).divides);
  CHECK(divides(vw, bin("v^2*w*(v^2 + 3*v*w + 2*w^2)", test::kVW), 1).divides);
  CHECK_THROWS_AS(divides(q, h, 1), InputError);

  // Roots at infinity are tracked through the v1-valuation.
  const DivisionResult w3 = divides(bin("w", test::kVW), bin("v*w^3", test::kVW), 3);
  CHECK(w3.divides);
  CHECK(w3.quotient == bin("v", test::kVW));
}

TEST_CASE("divisibility agrees with the multiply-back oracle") {
  test::Rng rng(15);
  int positives = 0;
  for (int i = 0; i < 100; ++i) {
    const int dq = static_cast<int>(rng.integer(1, 2));
    const unsigned power = static_cast<unsigned>(rng.integer(1, 2));
    BinaryForm q = rng.binary(dq, test::kVW, 3);
    if (q.is_zero()) q = bin(dq == 1 ? "v" : "v*w", test::kVW);
    const int dh = static_cast<int>(rng.integer(0, 3));
    const BinaryForm h = rng.binary(dh, test::kVW, 3);
    BinaryForm gamma = q.pow(power) * h;
    if (i % 2 == 1) gamma = gamma + rng.binary(gamma.degree(), test::kVW, 1);
    const DivisionResult r = divides(q, gamma, power);
    if (r.divides) {
      ++positives;
      CHECK(q.pow(power) * r.quotient == gamma);
    } else {
      CHECK(i % 2 == 1);
      // No quotient exists: the remainder modulo q^power is nonzero.
      const auto rem = remainder_coordinates(gamma, q.pow(power));
      bool all_zero = true;
      for (const auto& c : rem) all_zero = all_zero && c.is_zero();
      CHECK(!all_zero);
    }
  }
  CHECK(positives >= 50);
}

TEST_CASE("remainder coordinates") {
  const BinaryForm q = bin("s0*s1", test::kS);
  // Degree-3 forms modulo s0*s1 keep the s0^3 and s1^3 coordinates.
  CHECK(remainder_coordinates(bin("s0^3 + 4*s0^2*s1 - s1^3", test::kS), q) == std::vector<Rational>{1, -1});
  const BinaryForm q2 = bin("s0^2 - 3*s0*s1 + s1^2", test::kS);
  CHECK(remainder_coordinates(q2 * bin("s0^2 - s1^2", test::kS), q2) == std::vector<Rational>{0, 0});
  CHECK_THROWS_AS(remainder_coordinates(q2, BinaryForm(2, test::kS)), PreconditionError);
}

TEST_CASE("gcd of binary forms") {
  const BinaryForm a = bin("(v - w)*(v + 2*w)*w", test::kVW);
  const BinaryForm b = bin("(v - w)*w^2", test::kVW);
  CHECK(gcd(a, b) == bin("v*w - w^2", test::kVW));
  CHECK(gcd(bin("v", test::kVW), bin("w", test::kVW)).degree() == 0);
}
