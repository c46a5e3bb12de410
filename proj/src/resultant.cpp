#include "luroth/resultant.hpp"

#include "luroth/errors.hpp"

namespace luroth {

RationalMatrix sylvester_matrix(const BinaryForm& g, const BinaryForm& h) {
  if (g.vars() != h.vars()) throw InputError("resultant of forms over different variables");
  const int m = g.degree();
  const int n = h.degree();
  if (m < 1 || n < 1) throw InputError("resultant needs forms of positive degree");
  const auto size = static_cast<std::size_t>(m + n);
  RationalMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) = g.coeff(j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) = h.coeff(j);
  return s;
}

Rational sylvester_resultant(const BinaryForm& g, const BinaryForm& h) {
  if (g.is_zero() || h.is_zero()) throw InputError("resultant of the zero form");
  return determinant(sylvester_matrix(g, h));
}

Rational disc_binary_quadratic(const BinaryForm& h) {
  if (h.degree() != 2) throw InputError("discriminant requires a binary quadratic");
  return h.coeff(1) * h.coeff(1) - Rational(4) * h.coeff(0) * h.coeff(2);
}

Rational conic_det3(const TernaryForm& conic) { return determinant(symmetric_matrix(conic)); }

}  // namespace luroth
