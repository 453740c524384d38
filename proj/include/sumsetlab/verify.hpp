#pragma once

#include <string>
#include <vector>

namespace sumsetlab {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // diff text on failure, short summary on success
};

// Bundled cross-checks against the golden fixture tables in data_dir.
std::vector<CheckResult> verify_a0(const std::string& data_dir);
std::vector<CheckResult> verify_experiment1(const std::string& data_dir,
                                            int threads);
std::vector<CheckResult> verify_ranges(int threads);
std::vector<CheckResult> verify_triangular(const std::string& data_dir,
                                           int threads);
std::vector<CheckResult> verify_collisions();

// The 11-element worked example set.
extern const std::vector<std::int64_t> kWorkedExampleSet;

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sumsetlab
