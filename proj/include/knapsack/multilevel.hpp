#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knapsack/step_function.hpp"
#include "knapsack/towers.hpp"
#include "knapsack/uniform_merge.hpp"

namespace knapsack {

/// Level widths and caps for approximating min{B, merge of one group}.
/// x = sqrt(B/r) = alpha^{2^{d-1}}, delta_i = eps sqrt(Br) / alpha^{2^{d-i}},
/// caps[i] = B_i = B t / alpha^{2^{d-i}} for i = 0..d.
struct LevelSchedule {
  int d = 1;
  double alpha = 2.0;
  std::vector<double> deltas;
  std::vector<double> caps;
  double t = 2.0;
  double B = 0.0;
  std::size_t r = 1;
  double eps = 0.0;

  TowerParams tower_params() const { return {deltas, eps}; }
};

/// Schedule with provisional t = alpha. Requires B >= 4r and r >= 1.
LevelSchedule choose_level_params(double B, std::size_t r, double eps);

/// Largest |Delta_i^{(j)}| * eps * r / delta_i over all group towers.
double tower_slack(std::span<const SetTower> towers, const LevelSchedule& sched);

/// Sets t = max(alpha, slack) and recomputes caps from cap_B.
void finalize_schedule(LevelSchedule& sched, double slack, double cap_B);

/// Precision used for the base sets when a group must be approximated
/// within factor 1+eps.
double group_precision(double eps);

/// Approximates min{B_d, merge of fs} within factor 1+eps. `assignments[k]`
/// is the rounding of fs[k] recorded by partition_profits; when empty the
/// roundings are recomputed from the tower generated by `base`.
/// sched.eps must be at most group_precision(eps).
StepFunction approx_group(std::span<const UniformFunction> fs,
                          std::span<const ProfitAssignment> assignments,
                          std::span<const double> base,
                          const LevelSchedule& sched, double eps);

/// min{B, f_1 (+) ... (+) f_m} within factor 1+eps, profits in [1,2].
StepFunction approx_capped(std::span<const UniformFunction> fs, double B,
                           double eps);

/// f_1 (+) ... (+) f_m within factor 1+eps, profits in [1,2].
StepFunction approx_items_small(std::span<const UniformFunction> fs, double eps);

}  // namespace knapsack
