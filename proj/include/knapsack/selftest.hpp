#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knapsack {

struct SelftestOptions {
  std::string suite;    // empty runs every suite
  std::string corrupt;  // "smawk" injects a fault into the SMAWK suite
};

std::vector<std::string> selftest_suites();

/// Prints one `suite NAME: pass|FAIL ...` line per suite. Returns 0 iff all
/// selected suites pass.
int run_selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace knapsack
