#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tangle {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Also run the n = 7 census.
  bool stretch = false;
  /// One "PASS"/"FAIL" line per criterion is written here as it finishes.
  std::ostream* log = nullptr;
};

/// Runs the acceptance criteria in order. Sample sizes and time limits are
/// fixed; only the seed of the randomized suites can be changed.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace tangle
