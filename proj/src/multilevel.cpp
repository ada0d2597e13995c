#include "knapsack/multilevel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "knapsack/errors.hpp"

namespace knapsack {

namespace {

double total_profit(std::span<const UniformFunction> fs) {
  double s = 0.0;
  for (const auto& f : fs) s += f.total_profit();
  return s;
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

// B t / alpha^{2^{d-i}} written through x = sqrt(B/r) = alpha^{2^{d-1}}.
double level_scale(double x, int i) { return std::pow(x, std::exp2(1 - i)); }

StepFunction merge_groups(std::span<const StepFunction> parts, double eps,
                          double upto = std::numeric_limits<double>::infinity()) {
  std::vector<StepFunction> nonzero;
  for (const auto& g : parts) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  if (nonzero.size() == 1) return cap(nonzero.front(), upto);
  double hi = 0.0;
  for (const auto& g : nonzero) hi += g.max_value();
  return merge_dnc(nonzero, eps, min_positive_value(nonzero), hi, upto);
}

struct Partitioned {
  GroupedProfits grouped;
  std::vector<SetTower> towers;
  std::vector<std::vector<UniformFunction>> fs;
  std::vector<std::vector<ProfitAssignment>> assignments;
};

Partitioned partition_functions(std::span<const UniformFunction> fs,
                                const LevelSchedule& sched) {
  Partitioned out;
  std::vector<double> profits;
  profits.reserve(fs.size());
  for (const auto& f : fs) profits.push_back(f.profit());
  const auto params = sched.tower_params();
  out.grouped = partition_profits(profits, sched.r, params);
  for (std::size_t g = 0; g < sched.r; ++g) {
    std::vector<UniformFunction> members;
    std::vector<ProfitAssignment> assigned;
    for (std::size_t k : out.grouped.groups[g]) {
      members.push_back(fs[k]);
      assigned.push_back(out.grouped.assignments[k]);
    }
    out.towers.push_back(members.empty()
                             ? SetTower{}
                             : generate_tower(out.grouped.bases[g], params));
    out.fs.push_back(std::move(members));
    out.assignments.push_back(std::move(assigned));
  }
  return out;
}

std::vector<StepFunction> approx_all_groups(const Partitioned& parts,
                                            const LevelSchedule& sched,
                                            double eps) {
  std::vector<StepFunction> out;
  for (std::size_t g = 0; g < parts.fs.size(); ++g) {
    if (parts.fs[g].empty()) continue;
    out.push_back(approx_group(parts.fs[g], parts.assignments[g],
                               parts.grouped.bases[g], sched, eps));
  }
  return out;
}

}  // namespace

LevelSchedule choose_level_params(double B, std::size_t r, double eps) {
  if (r < 1) throw std::domain_error("r must be positive");
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  const double rd = static_cast<double>(r);
  if (!(B >= 4.0 * rd)) throw std::domain_error("schedule needs B >= 4r");
  const double x = std::sqrt(B / rd);
  int d = static_cast<int>(std::floor(std::log2(std::log2(x)))) + 1;
  d = std::max(d, 1);
  while (d > 1 && std::exp2(std::exp2(d - 1)) > x) --d;
  while (std::exp2(std::exp2(d)) <= x) ++d;

  LevelSchedule s;
  s.d = d;
  s.alpha = std::pow(x, std::exp2(1 - d));
  s.B = B;
  s.r = r;
  s.eps = eps;
  s.t = s.alpha;
  const double root = std::sqrt(B * rd);
  for (int i = 1; i <= d; ++i) s.deltas.push_back(eps * root / level_scale(x, i));
  s.deltas.front() = eps * rd;  // exact identity
  finalize_schedule(s, 0.0, B);
  return s;
}

double tower_slack(std::span<const SetTower> towers, const LevelSchedule& sched) {
  double slack = 0.0;
  for (const auto& tw : towers) {
    for (std::size_t i = 0; i < tw.levels.size(); ++i) {
      const double size = static_cast<double>(tw.levels[i].size());
      slack = std::max(slack, size * sched.eps * static_cast<double>(sched.r) /
                                  sched.deltas[i]);
    }
  }
  return slack;
}

void finalize_schedule(LevelSchedule& sched, double slack, double cap_B) {
  sched.t = std::max(sched.alpha, slack);
  const double x = std::sqrt(sched.B / static_cast<double>(sched.r));
  sched.caps.assign(static_cast<std::size_t>(sched.d) + 1, 0.0);
  for (int i = 0; i <= sched.d; ++i) {
    sched.caps[static_cast<std::size_t>(i)] = cap_B * sched.t / level_scale(x, i);
  }
}

double group_precision(double eps) { return eps / (10.0 * (1.0 + eps)); }

StepFunction approx_group(std::span<const UniformFunction> fs,
                          std::span<const ProfitAssignment> assignments,
                          std::span<const double> base,
                          const LevelSchedule& sched, double eps) {
  if (fs.empty()) return {};
  if (sched.eps > group_precision(eps) * (1.0 + 1e-12)) {
    throw ContractError("schedule precision too coarse for the target factor");
  }
  if (!assignments.empty() && assignments.size() != fs.size()) {
    throw std::invalid_argument("one assignment per function required");
  }
  const auto params = sched.tower_params();
  const SetTower tower = generate_tower(base, params);

  std::vector<ProfitAssignment> local;
  if (assignments.empty()) {
    for (const auto& f : fs) {
      const auto choice = best_multiple_below(f.profit(), tower.top());
      ProfitAssignment a;
      if (choice.multiplier > 0) {
        a.multiple = choice.value;
        a.k = choice.multiplier;
        a.top = tower.top()[choice.index];
        a.chain = tower.chain(choice.index);
        a.generator = a.chain.front();
      }
      local.push_back(std::move(a));
    }
    assignments = local;
  }

  std::vector<UniformFunction> rounded;
  rounded.reserve(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const double p = fs[k].profit();
    const auto& a = assignments[k];
    if (a.k < 1 || a.chain.size() != static_cast<std::size_t>(sched.d) ||
        a.multiple > p * (1.0 + 1e-12) || p - a.multiple > 8.0 * sched.eps) {
      throw ContractError("profit has no top-set multiple in [p - 8 eps, p]");
    }
    rounded.push_back(fs[k].with_profit(a.multiple));
  }

  const double S = total_profit(fs);
  const auto& caps = sched.caps;
  StepFunction best = fast_naive_capped(fs, std::min(caps[0], S), eps);
  for (int i = 1; i <= sched.d; ++i) {
    const double lower = caps[static_cast<std::size_t>(i) - 1];
    if (lower >= S) break;
    std::vector<double> quanta;
    quanta.reserve(fs.size());
    for (const auto& a : assignments) {
      quanta.push_back(a.chain[static_cast<std::size_t>(i) - 1]);
    }
    auto level = uniform_merge_quantized(
        rounded, quanta, std::min(caps[static_cast<std::size_t>(i)], S));
    if (level.error_bound > 8.0 * sched.eps * lower * (1.0 + 1e-9)) {
      throw ContractError("level error exceeds the schedule bound");
    }
    best = pointwise_max(best, level.function);
  }
  return cap(best, caps.back());
}

StepFunction approx_capped(std::span<const UniformFunction> fs, double B,
                           double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (fs.empty() || !(B > 0.0)) return {};
  if (!in_band(B, std::pow(eps, -0.01) / 4.0, 4.0 / eps)) {
    return naive_capped(fs, B, eps);
  }
  const double e = split_budget(eps, 2);
  std::size_t r = static_cast<std::size_t>(std::max(1.0, std::ceil(std::cbrt(B))));
  r = std::min(r, fs.size());
  if (B < 4.0 * static_cast<double>(r)) return naive_capped(fs, B, eps);
  LevelSchedule sched = choose_level_params(B, r, group_precision(e));
  if (!sched.tower_params().valid()) return naive_capped(fs, B, eps);

  const Partitioned parts = partition_functions(fs, sched);
  finalize_schedule(sched, tower_slack(parts.towers, sched), B);
  const auto groups = approx_all_groups(parts, sched, e);
  return cap(merge_groups(groups, e, B), B);
}

StepFunction approx_items_small(std::span<const UniformFunction> fs, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  if (fs.empty()) return {};
  if (fs.size() == 1) return fs.front().to_step_function();
  const double m = static_cast<double>(fs.size());
  const double total = total_profit(fs);
  if (!in_band(m, std::pow(eps, -2.0 / 3.0) / 4.0, 4.0 / eps)) {
    return naive_capped(fs, total, eps);
  }
  const double e = split_budget(eps, 2);
  std::size_t r = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::pow(m, 0.75) * std::sqrt(eps))));
  r = std::min(r, fs.size());
  const double rd = static_cast<double>(r);
  const double guess = std::exp2(std::ceil(std::log2(std::max(4.0 * rd, 2.0 * total / rd))));
  LevelSchedule sched = choose_level_params(guess, r, group_precision(e));
  if (!sched.tower_params().valid()) return naive_capped(fs, total, eps);

  const Partitioned parts = partition_functions(fs, sched);
  double largest = 0.0;
  for (const auto& g : parts.fs) largest = std::max(largest, total_profit(g));
  finalize_schedule(sched, tower_slack(parts.towers, sched), std::max(guess, largest));
  const auto groups = approx_all_groups(parts, sched, e);
  return merge_groups(groups, e);
}

}  // namespace knapsack
