#include "luroth/point.hpp"

#include <sstream>

#include "luroth/errors.hpp"

namespace luroth {

ProjectivePoint::ProjectivePoint(Rational a, Rational b, Rational c)
    : ProjectivePoint(std::array<Rational, 3>{std::move(a), std::move(b), std::move(c)}) {}

ProjectivePoint::ProjectivePoint(std::array<Rational, 3> coords) : coords_(std::move(coords)) {
  if (coords_[0].is_zero() && coords_[1].is_zero() && coords_[2].is_zero())
    throw InputError("projective point with all coordinates zero");
}

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
  std::array<Rational, 3> c;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t end = text.find(':', start);
    if ((i < 2) == (end == std::string_view::npos)) throw ParseError("expected three ':'-separated coordinates", start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    try {
      c[i] = Rational::parse(piece);
    } catch (const ParseError& e) {
      throw ParseError("bad coordinate '" + std::string(piece) + "'", start + e.position());
    }
    start = end + 1;
  }
  return ProjectivePoint(std::move(c));
}

std::size_t ProjectivePoint::pivot() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (!coords_[i].is_zero()) return i;
  return 3;  // unreachable: constructor rejects the zero vector
}

ProjectivePoint ProjectivePoint::normalized() const {
  const Rational inv = Rational(1) / coords_[pivot()];
  return ProjectivePoint(coords_[0] * inv, coords_[1] * inv, coords_[2] * inv);
}

std::string ProjectivePoint::to_string() const {
  // Primitive integer representative with a positive pivot.
  const ProjectivePoint n = normalized();
  mpz_class l = 1;
  for (const auto& c : n.coords_) l = lcm(l, mpz_class(c.raw().get_den()));
  std::array<mpz_class, 3> ints;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = n.coords_[i].raw().get_num() * (l / n.coords_[i].raw().get_den());
    g = gcd(g, ints[i]);
  }
  std::ostringstream os;
  os << '[' << ints[0] / g << ',' << ints[1] / g << ',' << ints[2] / g << ']';
  return os.str();
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  // Proportional iff every 2x2 minor vanishes.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) { return os << p.to_string(); }

}  // namespace luroth
