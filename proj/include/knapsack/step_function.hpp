#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace knapsack {

struct StepPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const StepPoint&, const StepPoint&) = default;
};

/// Monotone nondecreasing step function f(x) = y of the last breakpoint with
/// breakpoint.x <= x, and 0 before the first breakpoint.
///
/// Stored canonically: x and y both strictly increasing, all y > 0. The zero
/// function has no breakpoints.
class StepFunction {
 public:
  StepFunction() = default;

  /// Canonicalizes an arbitrary point cloud: the result is the upper
  /// envelope f(x) = max{y : (x', y) in points, x' <= x}.
  static StepFunction from_points(std::vector<StepPoint> points);

  /// Wraps points already in canonical form (checked).
  static StepFunction from_canonical(std::vector<StepPoint> points);

  double operator()(double x) const;

  std::span<const StepPoint> points() const { return points_; }
  std::size_t complexity() const { return points_.size(); }
  bool is_zero() const { return points_.empty(); }
  double max_value() const { return points_.empty() ? 0.0 : points_.back().y; }
  double min_positive_value() const;

  /// Multiplies all values by a positive factor.
  StepFunction scaled_values(double factor) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  explicit StepFunction(std::vector<StepPoint> points)
      : points_(std::move(points)) {}
  std::vector<StepPoint> points_;
};

double eval(const StepFunction& f, double x);

/// Pointwise min{f, bound}.
StepFunction cap(const StepFunction& f, double bound);

StepFunction pointwise_max(const StepFunction& f, const StepFunction& g);

/// Rounds every positive value down to the grid lowest * (1+eps)^k. Values
/// must be 0 or >= lowest.
StepFunction round_down_powers(const StepFunction& f, double eps,
                               double lowest);

/// Exact (max,+)-convolution over all breakpoint pairs.
StepFunction exact_maxplus(const StepFunction& f, const StepFunction& g);

/// Divide-and-conquer merge of f_1 (+) ... (+) f_m with factor 1+eps.
///
/// Balanced binary tree; leaves are rounded to powers of 1+e' and every
/// internal merge is exact and then re-rounded, for ceil(log2 m) + 1 rounding
/// layers in total with (1+e')^layers = 1+eps. All ranges must lie in
/// {0} u [lowest, highest]. With a finite `upto` the result approximates
/// min{upto, f_1 (+) ... (+) f_m}; every partial merge is capped there,
/// which is exact since the values are nonnegative.
StepFunction merge_dnc(std::span<const StepFunction> fs, double eps,
                       double lowest, double highest,
                       double upto = std::numeric_limits<double>::infinity());

/// Smallest positive value over a set of functions (0 if all are zero).
double min_positive_value(std::span<const StepFunction> fs);

/// Per-layer budget e with (1+e)^layers = 1+eps.
double split_budget(double eps, int layers);

/// Dump format: one `x y` pair per line, ascending.
void write_step_function(std::ostream& out, const StepFunction& f);
StepFunction read_step_function(std::istream& in);

}  // namespace knapsack
