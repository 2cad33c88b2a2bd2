#pragma once

// The nine acceptance criteria. Each runs to completion, never throws, and
// reports pass/fail together with its wall time against a pinned budget.

#include <string>
#include <vector>

namespace tperm::check {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

inline constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id);

/// One line: "[PASS] 3 identity suite (0.41 s / 10 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace tperm::check
