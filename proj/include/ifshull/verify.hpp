#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifshull {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion, printing one PASS/FAIL line per criterion to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

/// Runs a single criterion by id (1..9).
CriterionResult run_criterion(int id);

inline constexpr int kCriterionCount = 9;

}  // namespace ifshull
