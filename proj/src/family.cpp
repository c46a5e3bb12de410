#include <array>

#include "luroth/errors.hpp"
#include "luroth/poncelet.hpp"

namespace luroth::poncelet {

namespace {

// A linear entry a*u + b*v + c*w + d (d only for constant entries).
struct Entry {
  Rational d, u, v, w;
};

TernaryForm to_form(const Entry& e) {
  if (!e.d.is_zero()) return TernaryForm::constant(e.d, kDualVars);
  return e.u * TernaryForm::variable(0, kDualVars) + e.v * TernaryForm::variable(1, kDualVars) +
         e.w * TernaryForm::variable(2, kDualVars);
}

PolyMatrix build(const std::array<std::array<Entry, 6>, 6>& rows) {
  PolyMatrix m(6, 6, kDualVars);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.set(i, j, to_form(rows[i][j]));
  return m;
}

Entry k(long c) { return {Rational(c), 0, 0, 0}; }
Entry U(const Rational& c = 1) { return {0, c, 0, 0}; }
Entry V(const Rational& c = 1) { return {0, 0, c, 0}; }
Entry W(const Rational& c = 1) { return {0, 0, 0, c}; }

}  // namespace

PolyMatrix family_matrix(std::string_view name, const Rational& param) {
  const Rational e = param;
  if (name == "eps91") {
    return build({{
        {k(1), k(0), V(), k(0), k(0), k(0)},
        {k(0), k(0), W(), V(), k(0), k(0)},
        {k(1), k(0), U(e), W(), k(0), V(-1)},
        {k(0), k(1), k(0), k(0), U(), k(0)},
        {k(2), k(0), k(0), k(0), W(), U()},
        {k(0), k(1), k(0), U(-e), V(e), W()},
    }});
  }
  if (name == "92") {
    return build({{
        {k(0), k(-1), V(), k(0), k(0), k(0)},
        {k(0), k(0), W(), V(), k(0), k(0)},
        {k(1), k(0), U(), W(), k(0), V(-1)},
        {k(0), k(1), k(0), k(0), U(), k(0)},
        {k(0), k(0), k(0), k(0), W(), U()},
        {k(1), k(0), k(0), U(-1), V(), W()},
    }});
  }
  if (name == "93") {
    const Entry c{param, 0, 0, 0};
    const Entry neg_c{-param, 0, 0, 0};
    return build({{
        {k(0), k(-1), V(), k(0), k(0), k(0)},
        {k(0), k(0), W(), V(), k(0), k(0)},
        {k(1), c, U(), W(), k(0), V(-1)},
        {k(0), k(1), k(0), k(0), U(), k(0)},
        {k(0), k(0), k(0), k(0), W(), U()},
        {k(1), neg_c, k(0), U(-1), V(), W()},
    }});
  }
  throw InputError("unknown family '" + std::string(name) + "' (expected eps91, 92 or 93)");
}

}  // namespace luroth::poncelet
