#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "luroth/errors.hpp"
#include "luroth/poly_matrix.hpp"

namespace luroth {

namespace {

// Sparse, not necessarily homogeneous polynomial; Berkowitz intermediates
// mix degrees.
struct Poly {
  std::map<Exponent, Rational> terms;

  static Poly constant(const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.terms.emplace(Exponent{0, 0, 0}, c);
    return p;
  }

  void add(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms) add(e, -c);
    return *this;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
  }
};

Poly to_poly(const TernaryForm& f) {
  Poly p;
  for (const auto& [e, c] : f.terms()) p.terms.emplace(e, c);
  return p;
}

std::vector<Poly> entries_of(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::vector<Poly> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_poly(m.at(i, j)));
  return out;
}

TernaryForm to_form(const Poly& p, const PolyMatrix& m) {
  if (p.terms.empty()) {
    int degree = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      int col = 0;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.at(i, j).is_zero()) col = std::max(col, m.at(i, j).degree());
      degree += col;
    }
    return TernaryForm(degree, m.vars());
  }
  const Exponent& first = p.terms.begin()->first;
  const int degree = first[0] + first[1] + first[2];
  TermMap terms;
  for (const auto& [e, c] : p.terms) {
    if (e[0] + e[1] + e[2] != degree) throw InputError("determinant is not homogeneous");
    terms.emplace(e, c);
  }
  return TernaryForm(degree, m.vars(), std::move(terms));
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarTriple vars)
    : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, TernaryForm(0, vars)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarTriple vars, std::vector<TernaryForm> entries)
    : rows_(rows), cols_(cols), vars_(std::move(vars)), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  for (const auto& e : entries_) check_entry(e);
}

void PolyMatrix::check_entry(const TernaryForm& e) const {
  if (e.vars() != vars_) throw InputError("matrix entry over different variables");
  if (!e.is_zero() && e.degree() > 1) throw InputError("matrix entries must have degree at most 1");
}

void PolyMatrix::set(std::size_t i, std::size_t j, TernaryForm entry) {
  check_entry(entry);
  entries_.at(i * cols_ + j) = std::move(entry);
}

RationalMatrix PolyMatrix::evaluate(const std::array<Rational, 3>& point) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = at(i, j).eval(point);
  return out;
}

TernaryForm determinant_laplace(const PolyMatrix& m) {
  const std::vector<Poly> a = entries_of(m);
  const std::size_t n = m.rows();
  if (n > 20) throw InputError("matrix too large for Laplace expansion");
  // minors[S] = det of rows S (bitmask) against the first |S| columns.
  std::unordered_map<std::uint32_t, Poly> minors{{0u, Poly::constant(Rational(1))}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::unordered_map<std::uint32_t, Poly> next;
    const std::size_t col = k - 1;
    for (const auto& [mask, minor] : minors) {
      if (minor.terms.empty()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) continue;
        const Poly& entry = a[i * n + col];
        if (entry.terms.empty()) continue;
        const std::uint32_t bigger = mask | (1u << i);
        // Row i sits at position r among the rows of `bigger`; the cofactor
        // sign is (-1)^(r + col).
        const int r = std::popcount(bigger & ((1u << i) - 1u));
        Poly term = entry * minor;
        if ((r + static_cast<int>(col)) % 2 != 0) next[bigger] -= term;
        else next[bigger] += term;
      }
    }
    minors = std::move(next);
  }
  const std::uint32_t full = (1u << n) - 1u;
  auto it = minors.find(full);
  return to_form(it == minors.end() ? Poly{} : it->second, m);
}

TernaryForm determinant_berkowitz(const PolyMatrix& m) {
  const std::vector<Poly> a = entries_of(m);
  const std::size_t n = m.rows();
  auto at = [&](std::size_t i, std::size_t j) -> const Poly& { return a[i * n + j]; };

  // Coefficients of det(xI - A_r) for the leading r x r block, highest first.
  std::vector<Poly> vect{Poly::constant(Rational(1)), -at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C.
    std::vector<Poly> t{Poly::constant(Rational(1)), -at(r, r)};
    std::vector<Poly> power_c(r);  // A_r^k C
    for (std::size_t i = 0; i < r; ++i) power_c[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Poly rc;
      for (std::size_t j = 0; j < r; ++j) rc += at(r, j) * power_c[j];
      t.push_back(-rc);
      if (k + 1 == r) break;
      std::vector<Poly> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += at(i, j) * power_c[j];
      power_c = std::move(next);
    }
    std::vector<Poly> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += t[i - j] * vect[j];
    vect = std::move(updated);
  }
  Poly det = vect[n];
  if (n % 2 == 1) det = -det;
  return to_form(det, m);
}

TernaryForm determinant(const PolyMatrix& m) {
  return m.rows() <= 8 ? determinant_laplace(m) : determinant_berkowitz(m);
}

}  // namespace luroth
