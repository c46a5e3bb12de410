#include "luroth/ternary_form.hpp"

#include <algorithm>

#include "luroth/errors.hpp"

namespace luroth {

namespace {

void require_same_vars(const TernaryForm& a, const TernaryForm& b) {
  if (a.vars() != b.vars()) throw InputError("ternary forms over different variables");
}

void accumulate(TermMap& terms, const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

TernaryForm::TernaryForm(int degree, VarTriple vars) : degree_(degree), vars_(std::move(vars)) {
  if (degree < 0) throw InputError("negative degree");
}

TernaryForm::TernaryForm(int degree, VarTriple vars, TermMap terms)
    : degree_(degree), vars_(std::move(vars)) {
  if (degree < 0) throw InputError("negative degree");
  for (auto& [e, c] : terms) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree)
      throw InputError("exponent does not match the form degree");
    accumulate(terms_, e, c);
  }
}

TernaryForm TernaryForm::constant(const Rational& c, VarTriple vars) {
  return monomial({0, 0, 0}, c, std::move(vars));
}

TernaryForm TernaryForm::variable(int slot, VarTriple vars) {
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(slot)) = 1;
  return monomial(e, Rational(1), std::move(vars));
}

TernaryForm TernaryForm::monomial(const Exponent& e, const Rational& c, VarTriple vars) {
  TermMap t;
  t.emplace(e, c);
  return TernaryForm(e[0] + e[1] + e[2], std::move(vars), std::move(t));
}

Rational TernaryForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TernaryForm::eval(const std::array<Rational, 3>& point) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 3; ++i) term *= luroth::pow(point[i], static_cast<unsigned>(e[i]));
    sum += term;
  }
  return sum;
}

TernaryForm TernaryForm::partial(int slot) const {
  if (degree_ == 0) throw InputError("cannot differentiate a form of degree 0");
  if (slot < 0 || slot > 2) throw InputError("ternary form slot out of range");
  const auto s = static_cast<std::size_t>(slot);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[s] == 0) continue;
    Exponent f = e;
    --f[s];
    accumulate(out, f, Rational(e[s]) * c);
  }
  return TernaryForm(degree_ - 1, vars_, std::move(out));
}

std::array<TernaryForm, 3> TernaryForm::gradient() const { return {partial(0), partial(1), partial(2)}; }

TernaryForm TernaryForm::pow(unsigned exponent) const {
  TernaryForm out = constant(Rational(1), vars_);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

TernaryForm TernaryForm::normalized() const {
  if (terms_.empty()) return *this;
  const Rational inv = Rational(1) / terms_.begin()->second;
  return inv * *this;
}

TernaryForm TernaryForm::with_vars(VarTriple vars) const {
  TernaryForm out = *this;
  out.vars_ = std::move(vars);
  return out;
}

TernaryForm TernaryForm::operator-() const { return Rational(-1) * *this; }

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  require_same_vars(a, b);
  if (a.degree_ != b.degree_) throw InputError("adding ternary forms of different degrees");
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) accumulate(out.terms_, e, c);
  return out;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  require_same_vars(a, b);
  TernaryForm out(a.degree_ + b.degree_, a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      accumulate(out.terms_, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

TernaryForm operator*(const Rational& c, const TernaryForm& a) {
  TernaryForm out(a.degree_, a.vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

bool equal_up_to_scalar(const TernaryForm& a, const TernaryForm& b) {
  if (a.vars() != b.vars() || a.degree() != b.degree()) return false;
  return a.normalized() == b.normalized();
}

TernaryForm reorder_vars(const TernaryForm& f, const VarTriple& target) {
  std::array<std::size_t, 3> where{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto it = std::find(target.begin(), target.end(), f.vars()[i]);
    if (it == target.end()) throw InputError("variable '" + f.vars()[i] + "' missing from target ordering");
    where[i] = static_cast<std::size_t>(it - target.begin());
  }
  TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    Exponent moved{};
    for (std::size_t i = 0; i < 3; ++i) moved[where[i]] = e[i];
    terms.emplace(moved, c);
  }
  return TernaryForm(f.degree(), target, std::move(terms));
}

TernaryForm substitute_linear(const TernaryForm& f, const RationalMatrix& t) {
  if (t.rows() != 3 || t.cols() != 3) throw InputError("coordinate change must be 3x3");
  if (determinant(t).is_zero()) throw PreconditionError("coordinate change is singular");
  std::array<TernaryForm, 3> images{TernaryForm(1, f.vars()), TernaryForm(1, f.vars()),
                                    TernaryForm(1, f.vars())};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      images[i] = images[i] + t(i, j) * TernaryForm::variable(static_cast<int>(j), f.vars());

  // Powers of each image are reused across terms.
  std::array<std::vector<TernaryForm>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(TernaryForm::constant(Rational(1), f.vars()));
    for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  TernaryForm out(f.degree(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    TernaryForm term = c * powers[0][static_cast<std::size_t>(e[0])];
    term = term * powers[1][static_cast<std::size_t>(e[1])];
    term = term * powers[2][static_cast<std::size_t>(e[2])];
    out = out + term;
  }
  return out;
}

BinaryForm substitute_binary(const TernaryForm& f, const std::array<BinaryForm, 3>& l) {
  const int d = l[0].degree();
  if (l[1].degree() != d || l[2].degree() != d) throw InputError("substituted forms must share a degree");
  std::array<std::vector<BinaryForm>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(BinaryForm::monomial(l[i].vars(), 0, 0));
    for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * l[i]);
  }
  BinaryForm out(d * f.degree(), l[0].vars());
  for (const auto& [e, c] : f.terms())
    out = out + c * (powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                     powers[2][static_cast<std::size_t>(e[2])]);
  return out;
}

std::vector<BinaryForm> coefficients_in(const TernaryForm& f, int slot) {
  if (slot < 0 || slot > 2) throw InputError("ternary form slot out of range");
  const auto s = static_cast<std::size_t>(slot);
  std::array<std::size_t, 2> others{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != s) others[k++] = i;
  const VarPair pair{f.vars()[others[0]], f.vars()[others[1]]};
  std::vector<BinaryForm> out;
  for (int i = 0; i <= f.degree(); ++i) out.emplace_back(f.degree() - i, pair);
  for (const auto& [e, c] : f.terms()) {
    auto& target = out[static_cast<std::size_t>(e[s])];
    const int j = e[others[1]];
    // Rebuild rather than mutate: BinaryForm exposes coefficients read-only.
    std::vector<Rational> coeffs = target.coeffs();
    coeffs[static_cast<std::size_t>(j)] += c;
    target = BinaryForm(pair, std::move(coeffs));
  }
  return out;
}

TernaryForm lift(const BinaryForm& f, const VarTriple& vars, int slot0, int slot1) {
  const auto s0 = static_cast<std::size_t>(slot0);
  const auto s1 = static_cast<std::size_t>(slot1);
  if (s0 > 2 || s1 > 2 || s0 == s1) throw InputError("invalid lift slots");
  if (f.vars()[0] != vars[s0] || f.vars()[1] != vars[s1]) throw InputError("lift variable mismatch");
  TermMap terms;
  const int d = f.degree();
  for (int j = 0; j <= d; ++j) {
    if (f.coeff(j).is_zero()) continue;
    Exponent e{0, 0, 0};
    e[s0] = d - j;
    e[s1] = j;
    terms.emplace(e, f.coeff(j));
  }
  return TernaryForm(d, vars, std::move(terms));
}

RationalMatrix symmetric_matrix(const TernaryForm& conic) {
  if (conic.degree() != 2) throw InputError("symmetric matrix requires a quadratic form");
  RationalMatrix m(3, 3);
  const Rational half(1, 2);
  for (const auto& [e, c] : conic.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = half * c;
      m(idx[1], idx[0]) = half * c;
    }
  }
  return m;
}

}  // namespace luroth
