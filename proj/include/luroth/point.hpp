#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "luroth/rational.hpp"

namespace luroth {

/// Point of a projective plane; equality is up to a nonzero scalar.
class ProjectivePoint {
 public:
  ProjectivePoint(Rational a, Rational b, Rational c);
  explicit ProjectivePoint(std::array<Rational, 3> coords);

  /// Parses "a:b:c" with rational entries.
  static ProjectivePoint parse(std::string_view text);

  const std::array<Rational, 3>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Index of the first nonzero coordinate.
  std::size_t pivot() const;

  /// Scaled so that the pivot coordinate is 1.
  ProjectivePoint normalized() const;

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::array<Rational, 3> coords_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

using DualPoint = ProjectivePoint;

}  // namespace luroth
