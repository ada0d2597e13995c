// Acceptance criteria runner: `acceptance <id>` prints one line
// `criterion <id>: PASS|FAIL|REPORT ...` and exits nonzero on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "knapsack/bench.hpp"
#include "knapsack/errors.hpp"
#include "knapsack/oracle.hpp"
#include "knapsack/selftest.hpp"
#include "knapsack/smawk.hpp"
#include "knapsack/solver.hpp"
#include "knapsack/subset_sum.hpp"
#include "knapsack/testing.hpp"
#include "knapsack/towers.hpp"
#include "knapsack/uniform_merge.hpp"

using namespace knapsack;
using knapsack::testing::Check;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome failed(std::string why) { return {false, std::move(why)}; }

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Seeded small instances: integer weights, real profits spread over several
// binary exponents so several profit ranges are exercised.
Instance oracle_instance(SplitMix64& rng, std::size_t n, std::int64_t wmax) {
  Instance inst;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<double>(rng.uniform_int(1, wmax));
    const double p = std::floor(std::exp2(rng.uniform_real(0.0, 13.3)));
    inst.items.push_back({w, std::max(1.0, p)});
    total += w;
  }
  inst.capacity = static_cast<double>(
      rng.uniform_int(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(total))));
  return inst;
}

bool ratio_ok(double sol, double opt, double eps) {
  return sol <= opt * (1.0 + 1e-9) && opt <= (1.0 + eps) * (1.0 + 1e-9) * sol;
}

Outcome c1_approximation() {
  double worst = 1.0;
  std::size_t solved = 0;
  SplitMix64 rng(1001);
  for (int k = 0; k < 500; ++k) {
    const auto inst = oracle_instance(rng, static_cast<std::size_t>(rng.uniform_int(1, 12)), 10000);
    const double opt = brute_force_profile(inst.items)(inst.capacity);
    for (double eps : {0.2, 0.1, 0.05}) {
      const double sol = solve(inst, eps).value;
      ++solved;
      if (!ratio_ok(sol, opt, eps)) {
        return failed("brute-force suite instance " + std::to_string(k) + " eps " + num(eps) +
                      ": SOL " + num(sol) + " OPT " + num(opt));
      }
      if (sol > 0.0) worst = std::max(worst, std::pow(opt / sol, 1.0 / 1.0));
    }
  }
  SplitMix64 rng2(1002);
  for (int k = 0; k < 200; ++k) {
    const auto inst = oracle_instance(rng2, static_cast<std::size_t>(rng2.uniform_int(1, 200)), 10000);
    const auto W = static_cast<std::int64_t>(inst.capacity);
    const double opt = dp_profile(inst.items, W)(inst.capacity);
    for (double eps : {0.2, 0.1, 0.05}) {
      const double sol = solve(inst, eps).value;
      ++solved;
      if (!ratio_ok(sol, opt, eps)) {
        return failed("DP suite instance " + std::to_string(k) + " eps " + num(eps) +
                      ": SOL " + num(sol) + " OPT " + num(opt));
      }
      if (sol > 0.0) worst = std::max(worst, opt / sol);
    }
  }
  return {true, std::to_string(solved) + " solves, worst OPT/SOL " + num(worst)};
}

Outcome c2_sandwich() {
  SplitMix64 rng(1001);
  double worst_rel = 0.0;
  for (int k = 0; k < 500; ++k) {
    const auto inst = oracle_instance(rng, static_cast<std::size_t>(rng.uniform_int(1, 12)), 10000);
    for (double eps : {0.2, 0.1, 0.05}) {
      const auto result = solve(inst, eps);
      const auto reduced = preprocess(inst, preprocess_budget(eps));
      const auto exact = brute_force_profile(reduced.items);
      const Check c = knapsack::testing::sandwich(result.profile, exact, eps);
      if (!c.ok) {
        return failed("instance " + std::to_string(k) + " eps " + num(eps) + ": " + c.detail);
      }
      worst_rel = std::max(worst_rel, (c.worst - 1.0) / eps);
    }
  }
  return {true, "1500 profiles, worst (F/f - 1)/eps " + num(worst_rel)};
}

Outcome c3_smawk() {
  SplitMix64 rng(3003);
  for (int k = 0; k < 1000; ++k) {
    const auto m = knapsack::testing::random_monotone_matrix(rng, 50);
    const std::function<double(std::size_t, std::size_t)> value = [&](std::size_t i, std::size_t j) {
      return m(i, j);
    };
    if (smawk_argmax(m.rows, m.cols, value) != brute_row_argmax(m.rows, m.cols, value)) {
      return failed("matrix " + std::to_string(k) + " differs from brute force");
    }
  }
  return {true, "1000 matrices"};
}

Outcome c4_uniform_merge() {
  SplitMix64 rng(4004);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double delta = rng.uniform_real(0.02, 0.1);
    std::set<double> pool;
    const auto size = rng.uniform_int(1, 5);
    while (static_cast<std::int64_t>(pool.size()) < size) {
      pool.insert(delta * static_cast<double>(rng.uniform_int(4, 32)) / 4.0);
    }
    const std::vector<double> Delta(pool.begin(), pool.end());
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, 8));
    std::vector<UniformFunction> fs;
    StepFunction exact;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double z = Delta[static_cast<std::size_t>(rng.uniform_int(0, size - 1))];
      const double p = z * static_cast<double>(rng.uniform_int(1, 20));
      fs.push_back(knapsack::testing::random_uniform_function(
          rng, p, static_cast<std::size_t>(rng.uniform_int(1, 32)), 30.0, true));
      exact = exact_maxplus(exact, fs.back().to_step_function());
      total += fs.back().total_profit();
    }
    const double cap_B = rng.uniform_real(0.2, 1.1) * total;
    const auto merged = uniform_merge(fs, Delta, delta, cap_B);
    const double bound = 8.0 * delta * static_cast<double>(Delta.size());
    if (merged.error_bound > bound * (1.0 + 1e-12)) {
      return failed("input " + std::to_string(k) + ": certified error above 8 delta |Delta|");
    }
    const auto capped = cap(exact, cap_B);
    std::vector<double> xs;
    for (const auto& pt : capped.points()) xs.push_back(pt.x);
    for (const auto& pt : merged.function.points()) xs.push_back(pt.x);
    for (double x : xs) {
      const double g = merged.function(x);
      const double f = capped(x);
      if (g > f + 1e-9 * std::max(1.0, f) || g < f - bound - 1e-9 * std::max(1.0, f)) {
        return failed("input " + std::to_string(k) + " at x=" + num(x) + ": merge " + num(g) +
                      " exact " + num(f) + " bound " + num(bound));
      }
      worst = std::max(worst, (f - g) / bound);
    }
  }
  return {true, "200 inputs, worst gap / (8 delta |Delta|) " + num(worst)};
}

std::vector<TowerParams> criterion_schedules() {
  std::vector<TowerParams> out;
  for (double eps : {std::exp2(-6), std::exp2(-8)}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (auto& p : knapsack::testing::tower_schedules(eps, d)) out.push_back(p);
    }
  }
  return out;
}

std::string describe(const TowerParams& p) {
  std::string s = "eps=" + num(p.eps) + " deltas=";
  for (double d : p.deltas) s += num(d) + ";";
  return s;
}

Outcome c5_hitting() {
  std::string sizes;
  for (const auto& params : criterion_schedules()) {
    const auto base = construct_base_set(params);
    const Check c = knapsack::testing::hitting_guarantee(base, params);
    if (!c.ok) return failed(describe(params) + ": " + c.detail);
    sizes += " " + std::to_string(base.size());
  }
  return {true, std::to_string(criterion_schedules().size()) + " schedules, |Delta_1|:" + sizes};
}

Outcome c6_towers() {
  std::size_t towers = 0;
  for (const auto& params : criterion_schedules()) {
    const auto base = construct_base_set(params);
    const Check c = knapsack::testing::tower_invariants(generate_tower(base, params), params);
    if (!c.ok) return failed(describe(params) + ": " + c.detail);
    // Interval families I_p must be pairwise disjoint.
    for (double p : profit_grid(params.eps)) {
      auto goods = enumerate_good_integers(p, params);
      for (std::size_t i = 0; i + 1 < goods.size(); ++i) {
        const double K = static_cast<double>(goods[i].value);
        const double K2 = static_cast<double>(goods[i + 1].value);
        if ((p - params.eps) / K < p / K2 * (1.0 - 1e-12)) {
          return failed(describe(params) + ": overlapping intervals for p=" + num(p));
        }
      }
    }
    ++towers;
  }
  return {true, std::to_string(towers) + " towers"};
}

Outcome c7_greedy() {
  SplitMix64 rng(7007);
  for (int k = 0; k < 100; ++k) {
    const auto g = knapsack::testing::random_gap_config(rng, 10, 10);
    double W = 0.0;
    for (const auto& it : g.H) W += it.weight;
    std::vector<double> xs;
    for (int j = 0; j < 50; ++j) xs.push_back(W * j / 49.0);
    if (!greedy_lemma_check(g.H, g.L, g.alpha, xs)) {
      return failed("configuration " + std::to_string(k));
    }
  }
  return {true, "100 configurations x 50 points"};
}

Outcome c8_subset_sum() {
  SplitMix64 rng(8008);
  std::size_t largest = 0;
  double worst_size = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(0, 15));
    std::vector<double> w(n);
    for (auto& a : w) a = rng.uniform_real(0.5, 20.0);
    const double W = rng.uniform_real(1.0, 80.0);
    const double eps = rng.uniform_real(0.02, 0.5);
    const auto sketch = subset_sum_sketch(w, W, eps);
    const auto sums = brute_subset_sums(w);
    for (double v : sketch.values) {
      const double tol = 1e-9 * std::max(1.0, v);
      auto it = std::lower_bound(sums.begin(), sums.end(), v - tol);
      if (it == sums.end() || *it > v + tol || v > W) {
        return failed("seed " + std::to_string(k) + ": sketch value " + num(v) + " not attainable");
      }
    }
    for (double s : sums) {
      if (s > W) break;
      auto it = std::upper_bound(sketch.values.begin(), sketch.values.end(), s * (1.0 + 1e-12));
      if (it == sketch.values.begin() || *std::prev(it) < s - eps * W) {
        return failed("seed " + std::to_string(k) + ": sum " + num(s) + " not covered");
      }
    }
    largest = std::max(largest, sketch.values.size());
    worst_size = std::max(worst_size, static_cast<double>(sketch.values.size()) * eps);
  }
  return {true, "200 seeds, max |S| " + std::to_string(largest) + ", max |S| eps " + num(worst_size)};
}

// Independent check: K is good iff some divisor chain of K meets the prefix
// bands.
bool good_by_divisors(std::int64_t K, const TowerParams& params, std::size_t level,
                      std::int64_t prefix) {
  if (level == params.depth()) return K % prefix == 0;
  const double ratio = params.deltas[level] / params.deltas[0];
  for (std::int64_t next = prefix; next <= K; next += prefix) {
    if (K % next != 0) continue;
    const double v = static_cast<double>(next);
    if (v < ratio * (1.0 - 1e-12) || v > 2.0 * ratio * (1.0 + 1e-12)) continue;
    if (good_by_divisors(K, params, level + 1, next)) return true;
  }
  return false;
}

Outcome c9_counting() {
  // Counting modes.
  std::vector<std::vector<double>> chains;
  for (double t1 = 2.0; t1 <= 16384.0; t1 = std::floor(t1 * 1.7) + 1.0) {
    chains.push_back({t1});
    for (double r2 : {2.0, 3.0, 8.0}) {
      if (t1 * r2 > 16384.0) continue;
      chains.push_back({t1, t1 * r2});
      for (double r3 : {2.0, 4.5}) {
        if (t1 * r2 * r3 <= 16384.0) chains.push_back({t1, t1 * r2, t1 * r2 * r3});
      }
    }
  }
  std::string first_violation;
  std::size_t lower_ok = 0;
  std::size_t upper_ok = 0;
  for (const auto& T : chains) {
    const auto brute = count_product_representable(T, CountMode::brute);
    const auto tuples = count_product_representable(T, CountMode::tuples);
    double fact = 1.0;
    for (std::size_t i = 2; i <= T.size(); ++i) fact *= static_cast<double>(i);
    if (static_cast<double>(tuples) / fact <= static_cast<double>(brute)) ++lower_ok;
    if (brute <= tuples) {
      ++upper_ok;
    } else if (first_violation.empty()) {
      first_violation = "T=(";
      for (double t : T) first_violation += num(t) + ",";
      first_violation += ") brute " + std::to_string(brute) + " > tuples " + std::to_string(tuples);
    }
  }
  // Good integers versus divisor search.
  std::size_t compared = 0;
  for (double inv : {8.0, 16.0, 32.0, 64.0}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (double ratio : {2.0, 4.0}) {
        TowerParams params;
        params.eps = 1.0 / inv;
        for (std::size_t i = 0; i < d; ++i) params.deltas.push_back(std::pow(ratio, static_cast<double>(i)) / inv);
        if (!params.valid()) continue;
        for (double p : {1.0, 1.3, 1.5, 1.77, 2.0}) {
          std::set<std::int64_t> dp;
          for (const auto& g : enumerate_good_integers(p, params)) dp.insert(g.value);
          std::set<std::int64_t> brute;
          const double d1 = params.deltas[0];
          const auto lo = static_cast<std::int64_t>(std::ceil(p / (4.0 * d1) * (1.0 - 1e-12)));
          const auto hi = static_cast<std::int64_t>(std::floor(p / (2.0 * d1) * (1.0 + 1e-12)));
          for (std::int64_t K = std::max<std::int64_t>(1, lo); K <= hi; ++K) {
            if (good_by_divisors(K, params, 1, 1)) brute.insert(K);
          }
          if (dp != brute) return failed("good integers differ for " + describe(params) + " p=" + num(p));
          ++compared;
        }
      }
    }
  }
  const std::string summary = std::to_string(chains.size()) + " chains: tuples/d! <= brute on " +
                              std::to_string(lower_ok) + ", brute <= tuples on " +
                              std::to_string(upper_ok) + "; good integers match on " +
                              std::to_string(compared) + " cases";
  if (lower_ok != chains.size() || upper_ok != chains.size()) {
    return failed(summary + "; first violation " + first_violation);
  }
  return {true, summary};
}

// The full grid runs as long as the projected cost of the next epsilon fits
// the time budget; skipped values are listed in the report.
Outcome c10_scaling() {
  const char* env_n = std::getenv("KNAPSACK_SCALING_N");
  const char* env_budget = std::getenv("KNAPSACK_SCALING_BUDGET_S");
  const std::size_t n = env_n ? static_cast<std::size_t>(std::stoull(env_n)) : 200000;
  const double budget_ms = 1000.0 * (env_budget ? std::stod(env_budget) : 600.0);
  std::vector<BenchRecord> records;
  std::string skipped;
  double spent = 0.0;
  for (int k = 5; k <= 9; ++k) {
    const double eps = std::exp2(-k);
    // Projected cost: at least 4x per halving of eps, more if observed.
    double growth = 4.0;
    if (records.size() >= 2) {
      const double prev = records[records.size() - 2].runtime_ms;
      growth = std::max(growth, records.back().runtime_ms / std::max(prev, 1e-3));
    }
    if (!records.empty() && spent + growth * records.back().runtime_ms > budget_ms) {
      skipped += " " + num(eps);
      continue;
    }
    BenchOptions opts;
    opts.ns = {n};
    opts.epsilons = {eps};
    opts.with_opt = false;
    const auto rows = run_bench(opts);
    for (const auto& r : rows) {
      spent += r.runtime_ms;
      records.push_back(r);
    }
  }
  std::ofstream out("scaling.csv");
  write_bench_csv(out, records);
  std::string detail = "n=" + std::to_string(n);
  if (records.size() >= 2) {
    // Least-squares slope of log runtime against log(1/eps).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : records) {
      const double x = std::log(1.0 / r.eps);
      const double y = std::log(std::max(r.runtime_ms, 1e-3));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(records.size());
    detail += " slope " + num((k * sxy - sx * sy) / (k * sxx - sx * sx));
  } else {
    detail += " slope n/a";
  }
  detail += " runtimes_ms";
  for (const auto& r : records) detail += " " + num(r.eps) + ":" + num(r.runtime_ms);
  if (!skipped.empty()) detail += " over budget, not run:" + skipped;
  return {true, detail};
}

std::string strip_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    if (cols.size() >= 8) cols[7].clear();
    for (const auto& c : cols) out += c + ",";
    out += "\n";
  }
  return out;
}

Outcome c11_determinism() {
  std::ostringstream a, b;
  const int ra = run_selftest({}, a);
  const int rb = run_selftest({}, b);
  if (ra != rb || a.str() != b.str()) return failed("selftest output differs between runs");
  BenchOptions opts;
  opts.ns = {10, 300};
  opts.epsilons = {0.2, 0.1};
  opts.seeds = 2;
  opts.algorithms = {"fptas", "smalln", "capped", "greedy"};
  opts.dist = Distribution::correlated;
  std::ostringstream c, d;
  write_bench_csv(c, run_bench(opts));
  write_bench_csv(d, run_bench(opts));
  if (strip_runtime(c.str()) != strip_runtime(d.str())) return failed("bench CSV differs between runs");
  if (instance_hash(generate_instance(100, Distribution::uniform, 5)) !=
      instance_hash(generate_instance(100, Distribution::uniform, 5))) {
    return failed("instance generation not reproducible");
  }
  return {true, "selftest and bench outputs identical"};
}

const std::map<std::string, std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> table{
      {"c1", {"approximation guarantee", c1_approximation}},
      {"c2", {"profile sandwich", c2_sandwich}},
      {"c3", {"SMAWK equivalence", c3_smawk}},
      {"c4", {"uniform-merge error bound", c4_uniform_merge}},
      {"c5", {"base-set hitting", c5_hitting}},
      {"c6", {"tower invariants", c6_towers}},
      {"c7", {"greedy lemma", c7_greedy}},
      {"c8", {"subset-sum contract", c8_subset_sum}},
      {"c9", {"product-counting cross-check", c9_counting}},
      {"c10", {"runtime scaling (report only)", c10_scaling}},
      {"c11", {"determinism", c11_determinism}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty()) {
    for (const auto& [id, entry] : criteria()) {
      if (id != "c10") ids.push_back(id);
    }
  }
  int status = 0;
  for (const auto& id : ids) {
    auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = failed(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* verdict = o.ok ? (id == "c10" ? "REPORT" : "PASS") : "FAIL";
    std::printf("criterion %s %s: %s (%s) [%.1f s]\n", id.c_str(), it->second.first.c_str(),
                verdict, o.detail.c_str(), secs);
    if (!o.ok) status = 1;
  }
  return status;
}
