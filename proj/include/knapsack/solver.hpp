#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/step_function.hpp"

namespace knapsack {

/// Items sorted by unit profit (ties by input index): H is the top B, M the
/// rest with unit profit >= q(1 - alpha), L everything else.
struct TripartiteSplit {
  std::vector<Item> H;
  std::vector<Item> M;
  std::vector<Item> L;
  double q = 0.0;
  double alpha = 0.0;
  std::size_t B = 0;
};

/// Cap B on the values handled by the unit-range pipeline; values above it
/// come from the greedy profile, whose additive error 2 is at most an
/// eps/(1+eps) fraction there.
std::size_t unit_range_cap(double eps);

/// Prefix sums in nonincreasing unit-profit order.
StepFunction greedy_sorted_profile(std::span<const Item> items);

TripartiteSplit split_hml(std::span<const Item> items, double eps, double alpha);

/// Whether (f_H (+) f_L)(x) == (f_H (+) min{2/alpha, f_L})(x) at every query
/// x <= sum of H weights, by brute force. Throws std::invalid_argument if
/// some L item has unit profit above q(1 - alpha).
bool greedy_lemma_check(std::span<const Item> H, std::span<const Item> L,
                        double alpha, std::span<const double> xs);

/// Profile of items with profits in [1,2] within factor 1+eps.
StepFunction solve_unit_range(std::span<const Item> items, double eps);

struct SolveResult {
  StepFunction profile;
  double value = 0.0;  // profile evaluated at the capacity
};

/// Budget used by solve for preprocessing; the returned profile
/// approximates the preprocessed instance within (1+eps) / (1+this).
double preprocess_budget(double eps);

/// Full pipeline: preprocess, split by profit exponent, solve each range,
/// merge. value <= OPT <= (1+eps) value.
SolveResult solve(const Instance& inst, double eps);

/// Same pipeline with the small-n merge for every profit range.
SolveResult solve_small_n(const Instance& inst, double eps);

/// Per-range rounding to one quantum and a single capped merge.
SolveResult solve_capped(const Instance& inst, double eps);

/// Greedy prefix profile of the whole instance (additive error max p).
SolveResult solve_greedy(const Instance& inst);

}  // namespace knapsack
