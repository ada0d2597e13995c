#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/step_function.hpp"

namespace knapsack {

/// f(x) = p * max{k : cumweights[k-1] <= x}: the profile of a class of items
/// sharing profit p. Cumulative weights are increasing and convex.
class UniformFunction {
 public:
  UniformFunction(double profit, std::vector<double> cumweights);
  /// Sorts the weights and takes prefix sums.
  static UniformFunction from_weights(double profit, std::vector<double> weights);

  double profit() const { return profit_; }
  std::span<const double> cumweights() const { return cum_; }
  std::size_t count() const { return cum_.size(); }
  double total_profit() const { return profit_ * static_cast<double>(cum_.size()); }
  double operator()(double x) const;
  StepFunction to_step_function() const;
  UniformFunction with_profit(double profit) const;

 private:
  double profit_;
  std::vector<double> cum_;
};

/// Groups items by exact profit.
std::vector<UniformFunction> uniform_classes(std::span<const Item> items);

/// Rounds each profit (required in [1,2]) down to a multiple of
/// q = 1/ceil(1/eps) and groups. Each profit loses less than q, so the
/// result approximates f_I within factor 1/(1-q).
std::vector<UniformFunction> build_uniform_functions(std::span<const Item> items,
                                                     double eps);

/// Minimum weight needed for profit >= min(k*quantum, cap), k = 0..K with
/// K = ceil(cap/quantum). Infinity where unreachable.
struct QuantizedProfile {
  double quantum = 1.0;
  double cap = 0.0;
  std::vector<double> minweight;

  static QuantizedProfile zero(double quantum, double cap);
  std::size_t top_level() const { return minweight.size() - 1; }
  double level_value(std::size_t k) const;
  StepFunction to_step_function() const;
};

std::size_t quantized_levels(double cap, double quantum);

/// Re-expresses the profile on a coarser quantum; each level loses less than
/// the new quantum.
QuantizedProfile switch_quantum(const QuantizedProfile& profile, double quantum);

/// Exact min-plus combination with a uniform function whose profit is an
/// integer multiple of the profile quantum (SMAWK per residue class).
QuantizedProfile add_uniform(const QuantizedProfile& profile,
                             const UniformFunction& f);

struct BoundedMerge {
  StepFunction function;
  double error_bound = 0.0;  // additive
};

/// Merges functions with per-function quanta (each profit a multiple of its
/// quantum), processed by ascending quantum. The result g satisfies
/// min(F,cap) - error_bound <= g <= min(F,cap) with F the exact merge.
BoundedMerge uniform_merge_quantized(std::span<const UniformFunction> fs,
                                     std::span<const double> quanta, double cap);

/// Uniform merge where every profit is a multiple of some element of Delta
/// (subset of [delta, 8 delta]); each function uses its largest such element.
BoundedMerge uniform_merge(std::span<const UniformFunction> fs,
                           std::span<const double> Delta, double delta,
                           double cap);

/// min(F, cap) within factor 1+eps using one quantum for all profits.
StepFunction naive_capped(std::span<const UniformFunction> fs, double cap,
                          double eps);

/// min(F, cap) within factor 1+eps for profits in [1,2]: high values through a
/// single-level base set, low values through naive_capped.
StepFunction fast_naive_capped(std::span<const UniformFunction> fs, double cap,
                               double eps);

}  // namespace knapsack
