#include "knapsack/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "knapsack/errors.hpp"

namespace knapsack {

namespace {

void check_brute_size(std::size_t n) {
  if (n > kBruteForceLimit) {
    throw OracleRefused("brute force limited to " + std::to_string(kBruteForceLimit) +
                        " items, got " + std::to_string(n));
  }
}

std::vector<StepPoint> with_origin(const StepFunction& f) {
  std::vector<StepPoint> pts{{0.0, 0.0}};
  pts.insert(pts.end(), f.points().begin(), f.points().end());
  return pts;
}

}  // namespace

StepFunction brute_force_profile(std::span<const Item> items) {
  check_brute_size(items.size());
  const std::size_t n = items.size();
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> w(total, 0.0);
  std::vector<double> p(total, 0.0);
  std::vector<StepPoint> pts;
  pts.reserve(total);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    w[mask] = w[rest] + items[low].weight;
    p[mask] = p[rest] + items[low].profit;
    pts.push_back({w[mask], p[mask]});
  }
  return StepFunction::from_points(std::move(pts));
}

StepFunction dp_profile(std::span<const Item> items, std::int64_t Wmax) {
  if (Wmax < 0) throw std::domain_error("Wmax must be nonnegative");
  if (static_cast<double>(items.size()) * static_cast<double>(Wmax) > kDpGuard) {
    throw OracleRefused("dp oracle guard n * Wmax <= 1e9 exceeded");
  }
  for (const auto& it : items) {
    if (it.weight != std::floor(it.weight)) {
      throw OracleRefused("dp oracle needs integer weights");
    }
  }
  std::vector<double> best(static_cast<std::size_t>(Wmax) + 1, 0.0);
  for (const auto& it : items) {
    const auto w = static_cast<std::int64_t>(it.weight);
    for (std::int64_t x = Wmax; x >= w; --x) {
      const auto xi = static_cast<std::size_t>(x);
      best[xi] = std::max(best[xi], best[xi - static_cast<std::size_t>(w)] + it.profit);
    }
  }
  std::vector<StepPoint> pts;
  for (std::size_t x = 0; x < best.size(); ++x) {
    pts.push_back({static_cast<double>(x), best[x]});
  }
  return StepFunction::from_points(std::move(pts));
}

StepFunction brute_maxplus(const StepFunction& f, const StepFunction& g) {
  const auto a = with_origin(f);
  const auto b = with_origin(g);
  std::vector<StepPoint> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) pts.push_back({u.x + v.x, u.y + v.y});
  }
  return StepFunction::from_points(std::move(pts));
}

double brute_maxplus_eval(const StepFunction& f, const StepFunction& g, double x) {
  double best = 0.0;
  for (const auto& u : with_origin(f)) {
    for (const auto& v : with_origin(g)) {
      if (u.x + v.x <= x) best = std::max(best, u.y + v.y);
    }
  }
  return best;
}

std::vector<std::size_t> brute_row_argmax(
    std::size_t rows, std::size_t cols,
    const std::function<double(std::size_t, std::size_t)>& value) {
  std::vector<std::size_t> out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      if (value(i, j) > value(i, out[i])) out[i] = j;
    }
  }
  return out;
}

QuantizedProfile brute_add_uniform(const QuantizedProfile& profile,
                                   const UniformFunction& f) {
  const auto c = static_cast<std::size_t>(std::llround(f.profit() / profile.quantum));
  const auto cw = f.cumweights();
  QuantizedProfile out = profile;
  for (std::size_t k = 0; k < profile.minweight.size(); ++k) {
    double best = profile.minweight[k];
    for (std::size_t j = 1; j <= cw.size(); ++j) {
      const std::size_t from = c * j >= k ? 0 : k - c * j;
      best = std::min(best, profile.minweight[from] + cw[j - 1]);
    }
    out.minweight[k] = best;
  }
  return out;
}

std::vector<double> brute_subset_sums(std::span<const double> weights) {
  check_brute_size(weights.size());
  const std::size_t total = std::size_t{1} << weights.size();
  std::vector<double> sums(total, 0.0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums[mask] = sums[mask & (mask - 1)] + weights[low];
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

}  // namespace knapsack
