#include "luroth/rational.hpp"

#include <cctype>

#include "luroth/errors.hpp"

namespace luroth {

Rational::Rational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
  if (i == digits_start) throw ParseError("expected integer", i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_start = i;
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (i == den_start) throw ParseError("expected denominator", i);
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator", digits_start);
  return Rational(mpq_class(mpz_class(num), d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= r;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace luroth
