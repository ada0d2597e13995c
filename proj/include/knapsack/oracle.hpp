#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/step_function.hpp"
#include "knapsack/uniform_merge.hpp"

namespace knapsack {

inline constexpr std::size_t kBruteForceLimit = 20;
inline constexpr double kDpGuard = 1e9;

/// Exact f_I by enumerating all subsets. Refuses n > 20.
StepFunction brute_force_profile(std::span<const Item> items);

/// Exact max profit for every integer capacity 0..Wmax. Weights must be
/// integers; refuses n * Wmax > 1e9.
StepFunction dp_profile(std::span<const Item> items, std::int64_t Wmax);

/// Quadratic (max,+)-convolution over all breakpoint pairs.
StepFunction brute_maxplus(const StepFunction& f, const StepFunction& g);

/// max over breakpoints x' + x'' <= x of f(x') + g(x'').
double brute_maxplus_eval(const StepFunction& f, const StepFunction& g, double x);

/// Leftmost argmax per row by full scan.
std::vector<std::size_t> brute_row_argmax(
    std::size_t rows, std::size_t cols,
    const std::function<double(std::size_t, std::size_t)>& value);

/// add_uniform by trying every item count for every level.
QuantizedProfile brute_add_uniform(const QuantizedProfile& profile,
                                   const UniformFunction& f);

/// All distinct subset sums (n <= 20).
std::vector<double> brute_subset_sums(std::span<const double> weights);

}  // namespace knapsack
