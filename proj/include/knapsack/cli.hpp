#pragma once

namespace knapsack {

/// Exit codes: 0 success, 1 selftest failure, 2 usage or I/O error,
/// 3 oracle refusal under --verify.
int run_cli(int argc, char** argv);

}  // namespace knapsack
