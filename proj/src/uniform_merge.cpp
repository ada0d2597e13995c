#include "knapsack/uniform_merge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "knapsack/errors.hpp"
#include "knapsack/smawk.hpp"
#include "knapsack/towers.hpp"

namespace knapsack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMultipleTol = 1e-9;

// Integer c with c*q == p up to relative tolerance, or 0.
std::int64_t multiple_of(double p, double q) {
  const double c = std::round(p / q);
  if (c < 1.0 || std::abs(c * q - p) > kMultipleTol * p) return 0;
  return static_cast<std::int64_t>(c);
}

}  // namespace

UniformFunction::UniformFunction(double profit, std::vector<double> cumweights)
    : profit_(profit), cum_(std::move(cumweights)) {
  if (!(profit_ > 0.0) || !std::isfinite(profit_)) {
    throw std::domain_error("uniform function profit must be positive");
  }
  if (cum_.empty()) throw std::domain_error("uniform function needs an item");
  const double tol = 1e-12 * std::max(1.0, cum_.back());
  double prev_step = 0.0;
  for (std::size_t k = 0; k < cum_.size(); ++k) {
    const double step = cum_[k] - (k == 0 ? 0.0 : cum_[k - 1]);
    if (!(step > 0.0)) {
      throw std::domain_error("cumulative weights must increase");
    }
    if (step < prev_step - tol) {
      throw std::domain_error("cumulative weights must be convex");
    }
    prev_step = step;
  }
}

UniformFunction UniformFunction::from_weights(double profit,
                                              std::vector<double> weights) {
  std::sort(weights.begin(), weights.end());
  std::partial_sum(weights.begin(), weights.end(), weights.begin());
  return UniformFunction(profit, std::move(weights));
}

double UniformFunction::operator()(double x) const {
  if (x < 0.0) throw std::domain_error("evaluation at negative weight");
  const auto k = std::upper_bound(cum_.begin(), cum_.end(), x) - cum_.begin();
  return profit_ * static_cast<double>(k);
}

StepFunction UniformFunction::to_step_function() const {
  std::vector<StepPoint> pts;
  pts.reserve(cum_.size());
  for (std::size_t k = 0; k < cum_.size(); ++k) {
    pts.push_back({cum_[k], profit_ * static_cast<double>(k + 1)});
  }
  return StepFunction::from_points(std::move(pts));
}

UniformFunction UniformFunction::with_profit(double profit) const {
  return UniformFunction(profit, cum_);
}

std::vector<UniformFunction> uniform_classes(std::span<const Item> items) {
  std::map<double, std::vector<double>> by_profit;
  for (const auto& it : items) by_profit[it.profit].push_back(it.weight);
  std::vector<UniformFunction> out;
  out.reserve(by_profit.size());
  for (auto& [p, ws] : by_profit) {
    out.push_back(UniformFunction::from_weights(p, std::move(ws)));
  }
  return out;
}

std::vector<UniformFunction> build_uniform_functions(std::span<const Item> items,
                                                     double eps) {
  if (!(eps > 0.0) || eps >= 1.0) throw std::domain_error("eps must lie in (0,1)");
  const double N = std::ceil(1.0 / eps);
  std::vector<Item> rounded;
  rounded.reserve(items.size());
  for (const auto& it : items) {
    if (it.profit < 1.0 || it.profit > 2.0) {
      throw std::domain_error("profits must lie in [1,2]");
    }
    const double k = std::floor(it.profit * N * (1.0 + 1e-12));
    rounded.push_back({it.weight, k / N});
  }
  return uniform_classes(rounded);
}

std::size_t quantized_levels(double cap, double quantum) {
  if (!(quantum > 0.0)) throw std::domain_error("quantum must be positive");
  if (!(cap > 0.0)) return 0;
  return static_cast<std::size_t>(std::ceil(cap / quantum * (1.0 - 1e-12)));
}

QuantizedProfile QuantizedProfile::zero(double quantum, double cap) {
  QuantizedProfile p;
  p.quantum = quantum;
  p.cap = cap;
  p.minweight.assign(quantized_levels(cap, quantum) + 1, kInf);
  p.minweight[0] = 0.0;
  return p;
}

double QuantizedProfile::level_value(std::size_t k) const {
  return std::min(static_cast<double>(k) * quantum, cap);
}

StepFunction QuantizedProfile::to_step_function() const {
  std::vector<StepPoint> pts;
  for (std::size_t k = 1; k < minweight.size(); ++k) {
    if (std::isfinite(minweight[k])) pts.push_back({minweight[k], level_value(k)});
  }
  return StepFunction::from_points(std::move(pts));
}

QuantizedProfile switch_quantum(const QuantizedProfile& profile,
                                double quantum) {
  QuantizedProfile out = QuantizedProfile::zero(quantum, profile.cap);
  const std::size_t K = profile.top_level();
  const std::size_t Kn = out.top_level();
  for (std::size_t k = 1; k < Kn; ++k) {
    const double j = std::ceil(static_cast<double>(k) * quantum /
                               profile.quantum * (1.0 - 1e-12));
    out.minweight[k] = profile.minweight[std::min(K, static_cast<std::size_t>(j))];
  }
  if (Kn > 0) out.minweight[Kn] = profile.minweight[K];
  return out;
}

QuantizedProfile add_uniform(const QuantizedProfile& profile,
                             const UniformFunction& f) {
  const std::int64_t c64 = multiple_of(f.profit(), profile.quantum);
  if (c64 == 0) {
    throw ContractError("profit is not a multiple of the profile quantum");
  }
  const auto c = static_cast<std::size_t>(c64);
  const std::size_t K = profile.top_level();
  const auto cw = f.cumweights();
  const std::size_t L = cw.size();
  const auto& old = profile.minweight;
  QuantizedProfile out = profile;

  std::vector<double> a;
  for (std::size_t r = 0; r < c && r <= K; ++r) {
    // Column u+1 holds a_u; a_{-1} = old[0] stands for levels clamped at 0.
    a.assign(1, old[0]);
    for (std::size_t k = r; k <= K && std::isfinite(old[k]); k += c) {
      a.push_back(old[k]);
    }
    const std::size_t rows = (K - r) / c + 1;
    const std::size_t cols = a.size();
    // Lexicographic (distance outside the band, value at the clamped index):
    // the limit of a convex extension of cw, so the matrix stays Monge.
    auto key = [&](std::size_t t, std::size_t col) {
      const auto u = static_cast<std::int64_t>(col) - 1;
      const std::int64_t diff = static_cast<std::int64_t>(t) - u;
      if (diff < 0) return std::pair<double, double>{static_cast<double>(-diff), a[col]};
      if (diff > static_cast<std::int64_t>(L)) {
        return std::pair<double, double>{static_cast<double>(diff) - static_cast<double>(L),
                                         a[col] + cw[L - 1]};
      }
      const double w = diff == 0 ? 0.0 : cw[static_cast<std::size_t>(diff) - 1];
      return std::pair<double, double>{0.0, a[col] + w};
    };
    const auto best = smawk_rows(rows, cols, key, std::less<std::pair<double, double>>{});
    for (std::size_t t = 0; t < rows; ++t) {
      const auto kv = key(t, best[t]);
      out.minweight[r + c * t] = kv.first > 0.0 ? kInf : kv.second;
    }
  }
  return out;
}

BoundedMerge uniform_merge_quantized(std::span<const UniformFunction> fs,
                                     std::span<const double> quanta,
                                     double cap) {
  if (fs.size() != quanta.size()) {
    throw std::invalid_argument("one quantum per function required");
  }
  double total = 0.0;
  for (const auto& f : fs) total += f.total_profit();
  cap = std::min(cap, total);
  if (fs.empty() || !(cap > 0.0)) return {};
  std::vector<std::size_t> order(fs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return quanta[x] < quanta[y]; });
  QuantizedProfile prof = QuantizedProfile::zero(quanta[order.front()], cap);
  double error = 0.0;
  for (std::size_t i : order) {
    if (quanta[i] > prof.quantum * (1.0 + 1e-12)) {
      prof = switch_quantum(prof, quanta[i]);
      error += quanta[i];
    }
    prof = add_uniform(prof, fs[i]);
  }
  return {prof.to_step_function(), error};
}

BoundedMerge uniform_merge(std::span<const UniformFunction> fs,
                           std::span<const double> Delta, double delta,
                           double cap) {
  for (double z : Delta) {
    if (z < delta * (1.0 - kMultipleTol) || z > 8.0 * delta * (1.0 + kMultipleTol)) {
      throw ContractError("Delta must lie in [delta, 8 delta]");
    }
  }
  std::vector<double> sorted(Delta.begin(), Delta.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> quanta;
  quanta.reserve(fs.size());
  for (const auto& f : fs) {
    auto it = std::find_if(sorted.begin(), sorted.end(), [&](double z) {
      return multiple_of(f.profit(), z) != 0;
    });
    if (it == sorted.end()) {
      throw ContractError("profit is not a multiple of any element of Delta");
    }
    quanta.push_back(*it);
  }
  return uniform_merge_quantized(fs, quanta, cap);
}

StepFunction naive_capped(std::span<const UniformFunction> fs, double cap,
                          double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (fs.empty() || !(cap > 0.0)) return {};
  double pmin = kInf;
  for (const auto& f : fs) pmin = std::min(pmin, f.profit());
  const double N = std::ceil((1.0 + eps) / eps);
  const double q = std::min(1.0, pmin) / N;
  std::vector<UniformFunction> rounded;
  rounded.reserve(fs.size());
  for (const auto& f : fs) {
    const double k = std::floor(f.profit() / q * (1.0 + 1e-12));
    rounded.push_back(f.with_profit(k * q));
  }
  const std::vector<double> quanta(rounded.size(), q);
  return uniform_merge_quantized(rounded, quanta, cap).function;
}

StepFunction fast_naive_capped(std::span<const UniformFunction> fs, double cap,
                               double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (fs.empty() || !(cap > 0.0)) return {};
  for (const auto& f : fs) {
    if (f.profit() < 1.0 - 1e-12 || f.profit() > 2.0 + 1e-12) {
      throw std::domain_error("profits must lie in [1,2]");
    }
  }
  double eps_f = eps / (3.0 * (1.0 + eps));
  const double cap2 = std::exp2(std::ceil(std::log2(std::max(1.0, cap))));
  const double delta = std::min(0.125, eps_f * std::pow(cap2, 0.01));
  eps_f = std::min(eps_f, delta);
  const auto Delta = cached_base_set(TowerParams{{delta}, eps_f});

  std::vector<UniformFunction> rounded;
  std::vector<double> quanta;
  rounded.reserve(fs.size());
  quanta.reserve(fs.size());
  for (const auto& f : fs) {
    const auto choice = best_multiple_below(f.profit(), *Delta);
    if (choice.multiplier == 0 ||
        f.profit() - choice.value > 2.0 * eps_f * (1.0 + 1e-9)) {
      throw ContractError("base set does not cover a profit");
    }
    rounded.push_back(f.with_profit(choice.value));
    quanta.push_back((*Delta)[choice.index]);
  }
  auto high = uniform_merge_quantized(rounded, quanta, cap);
  if (high.error_bound == 0.0) return high.function;
  const double low_cap = std::min(cap, high.error_bound / eps_f);
  return pointwise_max(high.function, naive_capped(fs, low_cap, eps));
}

}  // namespace knapsack
