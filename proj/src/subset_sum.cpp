#include "knapsack/subset_sum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "knapsack/errors.hpp"

namespace knapsack {

SumSketch subset_sum_sketch(std::span<const double> weights, double W,
                            double eps) {
  if (!(eps > 0.0) || eps >= 1.0) throw std::domain_error("eps must lie in (0,1)");
  if (!(W > 0.0)) throw std::domain_error("W must be positive");
  // Cells of width g; each keeps its smallest and largest candidate, so any
  // attainable sum stays bracketed by kept values at most g apart. Candidates
  // run up to W + g so the upper bracket of a sum <= W survives.
  const double g = eps * W;
  const double limit = W + g;
  std::vector<double> list{0.0};
  std::vector<double> shifted;
  std::vector<double> merged;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::domain_error("weights must be positive");
    if (w > limit) continue;
    shifted.clear();
    for (double v : list) {
      if (v + w <= limit) shifted.push_back(v + w);
    }
    merged.resize(list.size() + shifted.size());
    std::merge(list.begin(), list.end(), shifted.begin(), shifted.end(),
               merged.begin());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    list.clear();
    for (std::size_t i = 0; i < merged.size(); ++i) {
      const double cell = std::floor(merged[i] / g);
      const bool first = i == 0 || std::floor(merged[i - 1] / g) != cell;
      const bool last = i + 1 == merged.size() || std::floor(merged[i + 1] / g) != cell;
      if (first || last) list.push_back(merged[i]);
    }
  }
  SumSketch out;
  out.W = W;
  out.eps = eps;
  for (double v : list) {
    if (v <= W) out.values.push_back(v);
  }
  if (static_cast<double>(out.values.size()) > kSketchSizeConstant / eps) {
    throw ContractError("subset-sum sketch exceeds its size guard");
  }
  return out;
}

StepFunction subset_sum_profile(std::span<const Item> items, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (items.empty()) return {};
  std::vector<double> weights;
  weights.reserve(items.size());
  double total = 0.0;
  double wmin = items.front().weight;
  for (const auto& it : items) {
    if (std::abs(it.profit - it.weight) > 1e-12 * it.weight) {
      throw ContractError("subset-sum profile needs profit == weight");
    }
    weights.push_back(it.weight);
    total += it.weight;
    wmin = std::min(wmin, it.weight);
  }
  // A sum s in (W/2, W] loses at most e W <= 2 e s.
  const double e = eps / (2.0 * (1.0 + eps));
  std::vector<StepPoint> pts;
  for (double W = wmin;; W *= 2.0) {
    const auto sketch = subset_sum_sketch(weights, W, e);
    for (double v : sketch.values) {
      if (v > 0.0) pts.push_back({v, v});
    }
    if (W >= total) break;
  }
  return StepFunction::from_points(std::move(pts));
}

}  // namespace knapsack
