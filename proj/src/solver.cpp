#include "knapsack/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "knapsack/multilevel.hpp"
#include "knapsack/oracle.hpp"
#include "knapsack/subset_sum.hpp"
#include "knapsack/uniform_merge.hpp"

namespace knapsack {

namespace {

std::vector<std::size_t> unit_profit_order(std::span<const Item> items) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].unit_profit() > items[b].unit_profit();
  });
  return order;
}

// Exponent k with (1+e)^k <= v < (1+e)^{k+1}.
int power_exponent(double v, double e) {
  int k = static_cast<int>(std::floor(std::log(v) / std::log1p(e)));
  while (std::pow(1.0 + e, k) > v) --k;
  while (std::pow(1.0 + e, k + 1) <= v) ++k;
  return k;
}

StepFunction merge_all(std::span<const StepFunction> parts, double eps,
                       double upto = std::numeric_limits<double>::infinity()) {
  std::vector<StepFunction> nonzero;
  double hi = 0.0;
  for (const auto& f : parts) {
    if (f.is_zero()) continue;
    nonzero.push_back(f);
    hi += f.max_value();
  }
  if (nonzero.empty()) return {};
  return merge_dnc(nonzero, eps, min_positive_value(nonzero), hi, upto);
}

StepFunction approx_low_items(std::span<const Item> L, double alpha, double eps) {
  if (L.empty()) return {};
  const double e = split_budget(eps, 2);
  std::vector<Item> rounded;
  rounded.reserve(L.size());
  for (const auto& it : L) {
    rounded.push_back({it.weight, std::pow(1.0 + e, power_exponent(it.profit, e))});
  }
  return approx_capped(uniform_classes(rounded), 2.0 / alpha, e);
}

// Only min{B, f_M} is used, so the class merges are capped at B.
StepFunction approx_middle_items(std::span<const Item> M, double eps, double B) {
  if (M.empty()) return {};
  const double e = split_budget(eps, 3);
  std::map<int, std::vector<Item>> classes;
  for (const auto& it : M) {
    classes[power_exponent(it.unit_profit(), e)].push_back({it.weight, it.weight});
  }
  std::vector<StepFunction> parts;
  for (const auto& [k, items] : classes) {
    parts.push_back(subset_sum_profile(items, e).scaled_values(std::pow(1.0 + e, k)));
  }
  return merge_all(parts, e, B);
}

template <class RangeSolver>
SolveResult solve_by_ranges(const Instance& inst, double eps, int stages,
                            const RangeSolver& range_solver) {
  eps = clamp_epsilon(eps);
  const double e = split_budget(eps, stages);
  const Instance reduced = preprocess(inst, e);
  std::vector<StepFunction> parts;
  for (const auto& group : group_by_profit(reduced)) {
    parts.push_back(range_solver(group.items, e).scaled_values(group.scale()));
  }
  SolveResult out;
  out.profile = merge_all(parts, e);
  out.value = out.profile(inst.capacity);
  return out;
}

}  // namespace

std::size_t unit_range_cap(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  return static_cast<std::size_t>(std::ceil(2.0 * (1.0 + eps) / eps));
}

StepFunction greedy_sorted_profile(std::span<const Item> items) {
  std::vector<StepPoint> pts;
  pts.reserve(items.size());
  double w = 0.0;
  double p = 0.0;
  for (std::size_t i : unit_profit_order(items)) {
    w += items[i].weight;
    p += items[i].profit;
    pts.push_back({w, p});
  }
  return StepFunction::from_points(std::move(pts));
}

TripartiteSplit split_hml(std::span<const Item> items, double eps, double alpha) {
  if (!(alpha > 0.0) || alpha >= 1.0) throw std::domain_error("alpha must lie in (0,1)");
  TripartiteSplit s;
  s.alpha = alpha;
  s.B = unit_range_cap(eps);
  const auto order = unit_profit_order(items);
  const std::size_t h = std::min(s.B, items.size());
  for (std::size_t k = 0; k < h; ++k) s.H.push_back(items[order[k]]);
  if (h == 0) return s;
  s.q = s.H.back().unit_profit();
  const double threshold = s.q * (1.0 - alpha);
  for (std::size_t k = h; k < order.size(); ++k) {
    const Item& it = items[order[k]];
    (it.unit_profit() >= threshold ? s.M : s.L).push_back(it);
  }
  return s;
}

bool greedy_lemma_check(std::span<const Item> H, std::span<const Item> L,
                        double alpha, std::span<const double> xs) {
  if (H.empty()) throw std::invalid_argument("greedy lemma needs a nonempty H");
  double q = H.front().unit_profit();
  double W = 0.0;
  for (const auto& it : H) {
    q = std::min(q, it.unit_profit());
    W += it.weight;
  }
  for (const auto& it : L) {
    if (it.unit_profit() > q * (1.0 - alpha)) {
      throw std::invalid_argument("L item violates the unit-profit gap");
    }
  }
  const auto fH = brute_force_profile(H);
  const auto fL = brute_force_profile(L);
  const auto full = exact_maxplus(fH, fL);
  const auto capped = exact_maxplus(fH, cap(fL, 2.0 / alpha));
  for (double x : xs) {
    if (x > W) continue;
    const double a = full(x);
    const double b = capped(x);
    if (std::abs(a - b) > 1e-12 * std::max(1.0, a)) return false;
  }
  return true;
}

StepFunction solve_unit_range(std::span<const Item> items, double eps) {
  if (items.empty()) return {};
  const auto greedy = greedy_sorted_profile(items);
  const std::size_t B = unit_range_cap(eps);
  if (items.size() < B) {
    return pointwise_max(approx_items_small(uniform_classes(items), eps), greedy);
  }
  const double alpha = std::pow(eps, 0.75);
  const auto split = split_hml(items, eps, alpha);
  const double Bd = static_cast<double>(B);
  const auto high = cap(approx_items_small(uniform_classes(split.H), eps), Bd);
  const auto low = cap(approx_low_items(split.L, alpha, eps), Bd);
  const auto middle = cap(approx_middle_items(split.M, eps, Bd), Bd);
  const auto combined = cap(exact_maxplus(cap(exact_maxplus(high, low), Bd), middle), Bd);
  return pointwise_max(combined, greedy);
}

double preprocess_budget(double eps) { return split_budget(clamp_epsilon(eps), 3); }

SolveResult solve(const Instance& inst, double eps) {
  return solve_by_ranges(inst, eps, 3, [](std::span<const Item> items, double e) {
    return solve_unit_range(items, e);
  });
}

SolveResult solve_small_n(const Instance& inst, double eps) {
  return solve_by_ranges(inst, eps, 3, [](std::span<const Item> items, double e) {
    return approx_items_small(uniform_classes(items), e);
  });
}

SolveResult solve_capped(const Instance& inst, double eps) {
  return solve_by_ranges(inst, eps, 4, [](std::span<const Item> items, double e) {
    const auto fs = build_uniform_functions(items, e / (1.0 + e));
    double total = 0.0;
    for (const auto& f : fs) total += f.total_profit();
    return approx_capped(fs, total, e);
  });
}

SolveResult solve_greedy(const Instance& inst) {
  SolveResult out;
  out.profile = greedy_sorted_profile(inst.items);
  out.value = out.profile(inst.capacity);
  return out;
}

}  // namespace knapsack
