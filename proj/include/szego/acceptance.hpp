#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szego {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the release checklist, printing one pass/fail line per criterion.
/// Quick trims the long-running rate study; Full runs everything.
/// golden_dir may hold reference CSVs ("" skips the golden comparison).
std::vector<CriterionResult> run_acceptance(VerifyLevel level, std::ostream& log,
                                            const std::string& golden_dir = "");

int acceptance_exit_code(const std::vector<CriterionResult>& results);

}  // namespace szego
