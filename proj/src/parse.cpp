#include "luroth/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "luroth/errors.hpp"

namespace luroth {

namespace {

using Exps = std::vector<int>;
using Sparse = std::map<Exps, Rational>;

void add_term(Sparse& p, const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(out, e, ca * cb);
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Sparse parse() {
    Sparse p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse constant(const Rational& c) const {
    Sparse p;
    add_term(p, Exps(vars_.size(), 0), c);
    return p;
  }

  Sparse expression() {
    skip_space();
    Rational sign(1);
    if (accept('-')) sign = Rational(-1);
    else accept('+');
    Sparse acc = multiply(constant(sign), term());
    for (;;) {
      if (accept('+')) {
        for (const auto& [e, c] : term()) add_term(acc, e, c);
      } else if (accept('-')) {
        for (const auto& [e, c] : term()) add_term(acc, e, -c);
      } else {
        return acc;
      }
    }
  }

  Sparse term() {
    Sparse acc = power();
    while (accept('*')) acc = multiply(acc, power());
    return acc;
  }

  Sparse power() {
    Sparse base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    const std::string digits = integer();
    if (digits.empty()) throw ParseError("expected exponent", start);
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    const int n = std::stoi(digits);
    Sparse out = constant(Rational(1));
    for (int i = 0; i < n; ++i) out = multiply(out, base);
    return out;
  }

  std::string integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits.push_back(text_[pos_++]);
    return digits;
  }

  Sparse atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den.empty()) throw ParseError("expected denominator", pos_);
      }
      return constant(Rational::parse(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name.push_back(text_[pos_++]);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] != name) continue;
        Exps e(vars_.size(), 0);
        e[i] = 1;
        Sparse p;
        add_term(p, e, Rational(1));
        return p;
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

int homogeneous_degree(const Sparse& p, std::optional<int> expected) {
  std::optional<int> degree;
  for (const auto& [e, c] : p) {
    int d = 0;
    for (int x : e) d += x;
    if (degree && *degree != d) throw InputError("inhomogeneous polynomial: terms of degree " + std::to_string(*degree) + " and " + std::to_string(d));
    degree = d;
  }
  if (!degree) return expected.value_or(0);
  if (expected && *expected != *degree)
    throw InputError("expected a form of degree " + std::to_string(*expected) + ", got degree " + std::to_string(*degree));
  return *degree;
}

BinaryForm to_binary(const Sparse& p, const VarPair& vars, std::optional<int> expected) {
  const int d = homogeneous_degree(p, expected);
  std::vector<Rational> coeffs(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : p) coeffs[static_cast<std::size_t>(e[1])] = c;
  return BinaryForm(vars, std::move(coeffs));
}

TernaryForm to_ternary(const Sparse& p, const VarTriple& vars, std::optional<int> expected) {
  const int d = homogeneous_degree(p, expected);
  TermMap terms;
  for (const auto& [e, c] : p) terms.emplace(Exponent{e[0], e[1], e[2]}, c);
  return TernaryForm(d, vars, std::move(terms));
}

void check_vars(const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw InputError("repeated variable '" + vars[i] + "'");
  }
}

// Appends one term; `first` controls whether a leading '+' is dropped.
void format_term(std::ostringstream& os, const Rational& c, const std::string& monomial, bool first) {
  const bool negative = c.sign() < 0;
  const Rational mag = abs(c);
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag;
  } else if (mag.is_one()) {
    os << monomial;
  } else {
    os << mag << '*' << monomial;
  }
}

std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

AnyForm parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  check_vars(vars);
  if (vars.size() != 2 && vars.size() != 3) throw InputError("forms have two or three variables");
  const Sparse p = Parser(text, vars).parse();
  if (vars.size() == 2) return to_binary(p, {vars[0], vars[1]}, std::nullopt);
  return to_ternary(p, {vars[0], vars[1], vars[2]}, std::nullopt);
}

BinaryForm parse_binary(std::string_view text, const VarPair& vars, std::optional<int> expected_degree) {
  const std::vector<std::string> v(vars.begin(), vars.end());
  check_vars(v);
  return to_binary(Parser(text, v).parse(), vars, expected_degree);
}

TernaryForm parse_ternary(std::string_view text, const VarTriple& vars, std::optional<int> expected_degree) {
  const std::vector<std::string> v(vars.begin(), vars.end());
  check_vars(v);
  return to_ternary(Parser(text, v).parse(), vars, expected_degree);
}

std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const std::vector<std::string> vars(f.vars().begin(), f.vars().end());
  bool first = true;
  for (int j = 0; j <= f.degree(); ++j) {
    if (f.coeff(j).is_zero()) continue;
    format_term(os, f.coeff(j), monomial_text(vars, {f.degree() - j, j}), first);
    first = false;
  }
  return os.str();
}

std::string to_string(const TernaryForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const std::vector<std::string> vars(f.vars().begin(), f.vars().end());
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    format_term(os, c, monomial_text(vars, {e[0], e[1], e[2]}), first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const TernaryForm& f) { return os << to_string(f); }

nlohmann::json to_json(const BinaryForm& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (int j = 0; j <= f.degree(); ++j) {
    if (f.coeff(j).is_zero()) continue;
    terms.push_back({{"coef", f.coeff(j).to_string()}, {"exp", {f.degree() - j, j}}});
  }
  return {{"vars", f.vars()}, {"degree", f.degree()}, {"terms", terms}};
}

nlohmann::json to_json(const TernaryForm& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coef", c.to_string()}, {"exp", e}});
  return {{"vars", f.vars()}, {"degree", f.degree()}, {"terms", terms}};
}

AnyForm form_from_json(const nlohmann::json& j) {
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    check_vars(vars);
    const int degree = j.at("degree").get<int>();
    if (degree < 0) throw InputError("negative degree in JSON form");
    Sparse p;
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("exp").get<std::vector<int>>();
      if (e.size() != vars.size()) throw InputError("exponent length does not match variable count");
      int d = 0;
      for (int x : e) {
        if (x < 0) throw InputError("negative exponent in JSON form");
        d += x;
      }
      if (d != degree) throw InputError("JSON term degree does not match declared degree");
      add_term(p, e, Rational::parse(t.at("coef").get<std::string>()));
    }
    if (vars.size() == 2) return to_binary(p, {vars[0], vars[1]}, degree);
    if (vars.size() == 3) return to_ternary(p, {vars[0], vars[1], vars[2]}, degree);
    throw InputError("forms have two or three variables");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON form: ") + e.what());
  }
}

}  // namespace luroth
