#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kanenobu {

struct VerifyOptions {
  std::string suite = "all";  // jones, qpoly, khovanov, crossing, closed, all
  int max = 2;                // |p|, |q| <= max
  int sum_max = 3;            // |p + q| <= sum_max for khovanov
  int cube_cap = 14;
  int kauffman_cap = 12;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

// Runs the selected grid; checks are independent and run in parallel.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

// One line per check; returns true when nothing failed.
bool print_checks(const std::vector<CheckResult>& checks, std::ostream& os);

}  // namespace kanenobu
