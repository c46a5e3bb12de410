#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "luroth/poly_matrix.hpp"
#include "luroth/rational.hpp"

namespace luroth::acceptance {

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

using FamilyProvider = std::function<PolyMatrix(std::string_view, const Rational&)>;

/// Runs the ten acceptance checks. The family provider defaults to the
/// built-in matrices; tests substitute a corrupted one as a negative control.
std::vector<CheckResult> run_all(const FamilyProvider& families = {});

/// Runs a single check by id (1..10).
CheckResult run_one(int id, const FamilyProvider& families = {});

}  // namespace luroth::acceptance
