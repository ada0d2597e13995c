#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/random.hpp"
#include "knapsack/step_function.hpp"
#include "knapsack/towers.hpp"
#include "knapsack/uniform_merge.hpp"

namespace knapsack::testing {

/// Dense matrix whose row maxima are totally monotone:
/// u_i + v_j - (x_i - y_j)^2 with x, y sorted.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};
Matrix random_monotone_matrix(SplitMix64& rng, std::size_t max_dim);

/// Uniform function with `count` weights in [1, wmax] (integer if requested).
UniformFunction random_uniform_function(SplitMix64& rng, double profit,
                                        std::size_t count, double wmax,
                                        bool integer_weights);

/// H, L and alpha with max unit profit of L <= q(1 - alpha).
struct GapConfig {
  std::vector<Item> H;
  std::vector<Item> L;
  double alpha = 0.0;
};
GapConfig random_gap_config(SplitMix64& rng, std::size_t max_h, std::size_t max_l);

struct Check {
  bool ok = true;
  std::string detail;
  double worst = 1.0;  // largest observed exact / approx ratio
};

/// approx <= exact and exact <= (1+eps)(1+1e-9) approx at every breakpoint of
/// both functions.
Check sandwich(const StepFunction& approx, const StepFunction& exact, double eps);

/// Every profit-grid value has a top-set multiple in [p - eps, p].
Check hitting_guarantee(std::span<const double> base, const TowerParams& params);

/// Recurrence reproduction, level size bound and generator chains.
Check tower_invariants(const SetTower& tower, const TowerParams& params);

/// Valid delta schedules of depth d for precision eps: delta_1 = c eps and
/// ratios 2 or 4, ending at most 1/8.
std::vector<TowerParams> tower_schedules(double eps, std::size_t d);

}  // namespace knapsack::testing
