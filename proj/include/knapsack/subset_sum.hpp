#pragma once

#include <span>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/step_function.hpp"

namespace knapsack {

/// Attainable subset sums <= W such that every attainable sum s <= W has a
/// kept value in [s - eps W, s]. At most 2/eps + 4 values.
struct SumSketch {
  std::vector<double> values;
  double W = 0.0;
  double eps = 0.0;
};

/// Size guard: |values| <= kSketchSizeConstant / eps.
inline constexpr double kSketchSizeConstant = 16.0;

SumSketch subset_sum_sketch(std::span<const double> weights, double W, double eps);

/// Profile of items with p = w within factor 1+eps: sketches at capacities
/// w_min * 2^j up to the total weight, merged.
StepFunction subset_sum_profile(std::span<const Item> items, double eps);

}  // namespace knapsack
