#pragma once

#include <functional>
#include <string>
#include <vector>

namespace shl {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double runtime_ms = 0.0;
};

/// Runs the pinned verification battery (fixed seeds, fixed tolerances,
/// fixed runtime budgets) and returns one result per criterion, in order.
/// The observer, when given, sees each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& observer = {});

/// One fixed-format console line: "criterion NN: PASS/FAIL name [detail] (ms)".
std::string criterion_line(const CriterionResult& result);

}  // namespace shl
