#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "luroth/binary_form.hpp"
#include "luroth/ternary_form.hpp"

namespace luroth {

using AnyForm = std::variant<BinaryForm, TernaryForm>;

// Grammar: sums and differences of products of factors; a factor is an
// integer, a fraction int/int, a variable, a parenthesized expression, each
// optionally raised to a non-negative integer power. Parentheses are
// expanded. The result must be homogeneous.
//
// A form that parses to zero takes `zero_degree` (default 0). When
// `expected_degree` is given, a nonzero result of another degree is an error.
AnyForm parse_poly(std::string_view text, const std::vector<std::string>& vars);
BinaryForm parse_binary(std::string_view text, const VarPair& vars, std::optional<int> expected_degree = {});
TernaryForm parse_ternary(std::string_view text, const VarTriple& vars, std::optional<int> expected_degree = {});

/// Canonical text: graded-lex order, reduced fractions, unit coefficients
/// omitted, signs as separators ("x*y - t^2").
std::string to_string(const BinaryForm& f);
std::string to_string(const TernaryForm& f);

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);
std::ostream& operator<<(std::ostream& os, const TernaryForm& f);

nlohmann::json to_json(const BinaryForm& f);
nlohmann::json to_json(const TernaryForm& f);
AnyForm form_from_json(const nlohmann::json& j);

}  // namespace luroth
