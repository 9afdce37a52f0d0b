#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecalg {

// The self-verification suite: every classification statement the library
// implements, checked end to end by independent routes at desk scale. Each
// criterion is exact; some additionally carry a wall-clock budget.

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = no time budget
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  int workers = 1;
};

std::vector<std::string> acceptance_criteria_names();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One PASS/FAIL line per criterion.
void print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace ecalg
