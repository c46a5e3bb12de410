#include "luroth/binary_form.hpp"

#include <algorithm>

#include "luroth/errors.hpp"

namespace luroth {

namespace {

void require_same_vars(const BinaryForm& a, const BinaryForm& b) {
  if (a.vars() != b.vars()) throw InputError("binary forms over different variables");
}

// Dense univariate polynomial, ascending powers, no trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Power of v1 dividing the form.
int v1_valuation(const BinaryForm& f) {
  for (int j = 0; j <= f.degree(); ++j)
    if (!f.coeff(j).is_zero()) return j;
  return f.degree() + 1;
}

// f(x, 1); the coefficient of x^p is the coefficient of v0^p v1^(d-p).
Univariate dehomogenize(const BinaryForm& f) {
  const int d = f.degree();
  Univariate p(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) p[static_cast<std::size_t>(d - j)] = f.coeff(j);
  trim(p);
  return p;
}

BinaryForm homogenize(const Univariate& p, int degree, const VarPair& vars) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree + 1));
  for (std::size_t e = 0; e < p.size(); ++e) coeffs[static_cast<std::size_t>(degree) - e] = p[e];
  return BinaryForm(vars, std::move(coeffs));
}

// Returns {quotient, remainder}; divisor must be nonzero.
std::pair<Univariate, Univariate> divmod(Univariate num, const Univariate& den) {
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  Univariate quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = num[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

Univariate monic_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

BinaryForm::BinaryForm(int degree, VarPair vars) : vars_(std::move(vars)) {
  if (degree < 0) throw InputError("negative degree");
  coeffs_.resize(static_cast<std::size_t>(degree + 1));
}

BinaryForm::BinaryForm(VarPair vars, std::vector<Rational> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::monomial(VarPair vars, int e0, int e1, Rational coeff) {
  BinaryForm out(e0 + e1, std::move(vars));
  out.coeffs_[static_cast<std::size_t>(e1)] = std::move(coeff);
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::eval(const Rational& a, const Rational& b) const {
  const int d = degree();
  Rational sum;
  for (int j = 0; j <= d; ++j) {
    if (coeff(j).is_zero()) continue;
    sum += coeff(j) * luroth::pow(a, static_cast<unsigned>(d - j)) * luroth::pow(b, static_cast<unsigned>(j));
  }
  return sum;
}

BinaryForm BinaryForm::partial(int slot) const {
  const int d = degree();
  if (d == 0) throw InputError("cannot differentiate a form of degree 0");
  if (slot != 0 && slot != 1) throw InputError("binary form slot out of range");
  BinaryForm out(d - 1, vars_);
  for (int j = 0; j <= d; ++j) {
    // v0^(d-j) v1^j
    if (slot == 0 && j < d) out.coeffs_[static_cast<std::size_t>(j)] = Rational(d - j) * coeff(j);
    if (slot == 1 && j > 0) out.coeffs_[static_cast<std::size_t>(j - 1)] = Rational(j) * coeff(j);
  }
  return out;
}

BinaryForm BinaryForm::directional_derivative(const std::pair<Rational, Rational>& xi) const {
  if (degree() == 0) throw InputError("directional derivative of a degree-0 form");
  return xi.first * partial(0) + xi.second * partial(1);
}

BinaryForm BinaryForm::pow(unsigned exponent) const {
  BinaryForm out = BinaryForm::monomial(vars_, 0, 0);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

BinaryForm BinaryForm::normalized() const {
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    const Rational inv = Rational(1) / c;
    return inv * *this;
  }
  return *this;
}

BinaryForm BinaryForm::operator-() const { return Rational(-1) * *this; }

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  require_same_vars(a, b);
  if (a.degree() != b.degree()) throw InputError("adding binary forms of different degrees");
  BinaryForm out = a;
  for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] += b.coeffs_[j];
  return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  require_same_vars(a, b);
  BinaryForm out(a.degree() + b.degree(), a.vars_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) {
  BinaryForm out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

DivisionResult divides(const BinaryForm& divisor, const BinaryForm& dividend, unsigned power) {
  if (power == 0) throw InputError("power must be positive");
  require_same_vars(divisor, dividend);
  const BinaryForm full = divisor.pow(power);
  const int qdeg = dividend.degree() - full.degree();
  if (qdeg < 0) throw InputError("divisor degree exceeds dividend degree");
  if (full.is_zero()) throw PreconditionError("division by the zero form");
  BinaryForm zero(qdeg, dividend.vars());
  if (dividend.is_zero()) return {true, zero};

  if (v1_valuation(full) > v1_valuation(dividend)) return {false, zero};
  auto [quot, rem] = divmod(dehomogenize(dividend), dehomogenize(full));
  if (!rem.empty()) return {false, zero};
  return {true, homogenize(quot, qdeg, dividend.vars())};
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  require_same_vars(a, b);
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const int k = std::min(v1_valuation(a), v1_valuation(b));
  const Univariate g = monic_gcd(dehomogenize(a), dehomogenize(b));
  const int degree = static_cast<int>(g.size()) - 1 + k;
  return homogenize(g, degree, a.vars()).normalized();
}

std::vector<Rational> remainder_coordinates(const BinaryForm& form, const BinaryForm& modulus) {
  require_same_vars(form, modulus);
  if (modulus.is_zero()) throw PreconditionError("remainder modulo the zero form");
  const int d = modulus.degree();
  const int m = form.degree();
  const int k = v1_valuation(modulus);
  std::vector<Rational> r = form.coeffs();
  const Rational& lead = modulus.coeff(k);
  // Lead monomial v0^(d-k) v1^k; index j is reducible iff k <= j <= m-d+k.
  for (int j = k; j <= m - d + k; ++j) {
    const Rational c = r[static_cast<std::size_t>(j)] / lead;
    if (c.is_zero()) continue;
    for (int i = k; i <= d; ++i) r[static_cast<std::size_t>(j - k + i)] -= c * modulus.coeff(i);
  }
  std::vector<Rational> out;
  for (int j = 0; j <= m; ++j)
    if (j < k || j > m - d + k) out.push_back(r[static_cast<std::size_t>(j)]);
  return out;
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  if (a.vars() != b.vars() || a.degree() != b.degree()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

}  // namespace luroth
