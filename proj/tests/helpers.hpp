#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "luroth/binary_form.hpp"
#include "luroth/matrix.hpp"
#include "luroth/parse.hpp"
#include "luroth/ternary_form.hpp"

namespace test {

inline const luroth::VarTriple kUVW{"u", "v", "w"};
inline const luroth::VarTriple kXYT{"x", "y", "t"};
inline const luroth::VarPair kUV{"u", "v"};
inline const luroth::VarPair kVW{"v", "w"};
inline const luroth::VarPair kS{"s0", "s1"};

inline luroth::TernaryForm uvw(std::string_view text) { return luroth::parse_ternary(text, kUVW); }
inline luroth::TernaryForm xyt(std::string_view text) { return luroth::parse_ternary(text, kXYT); }
inline luroth::BinaryForm bin(std::string_view text, const luroth::VarPair& vars) {
  return luroth::parse_binary(text, vars);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  luroth::Rational rational(long bound = 6) { return luroth::Rational(integer(-bound, bound), integer(1, 4)); }

  luroth::BinaryForm binary(int degree, const luroth::VarPair& vars, long bound = 5) {
    std::vector<luroth::Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(integer(-bound, bound));
    return luroth::BinaryForm(vars, std::move(c));
  }

  luroth::TernaryForm ternary(int degree, const luroth::VarTriple& vars, long bound = 4) {
    luroth::TermMap terms;
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b) terms.emplace(luroth::Exponent{a, b, degree - a - b}, integer(-bound, bound));
    return luroth::TernaryForm(degree, vars, std::move(terms));
  }

  luroth::RationalMatrix invertible(std::size_t n = 3, long bound = 4) {
    for (;;) {
      luroth::RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(-bound, bound);
      if (!luroth::determinant(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace test
