#include "knapsack/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "knapsack/multilevel.hpp"
#include "knapsack/oracle.hpp"
#include "knapsack/smawk.hpp"
#include "knapsack/solver.hpp"
#include "knapsack/subset_sum.hpp"
#include "knapsack/testing.hpp"
#include "knapsack/towers.hpp"

namespace knapsack {

namespace {

using testing::Check;

Check fail(std::string why) {
  Check c;
  c.ok = false;
  c.detail = std::move(why);
  return c;
}

Check suite_smawk(bool corrupt) {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = testing::random_monotone_matrix(rng, 40);
    std::function<double(std::size_t, std::size_t)> value = [&](std::size_t i, std::size_t j) {
      return m(i, j);
    };
    std::function<double(std::size_t, std::size_t)> seen = value;
    if (corrupt) {
      seen = [&](std::size_t i, std::size_t j) { return j == 0 ? m(i, j) + 1e9 : m(i, j); };
    }
    if (smawk_argmax(m.rows, m.cols, seen) != brute_row_argmax(m.rows, m.cols, value)) {
      return fail("argmax mismatch on trial " + std::to_string(trial));
    }
  }
  return {};
}

Check suite_uniform() {
  SplitMix64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const double q = 0.25;
    auto prof = QuantizedProfile::zero(q, static_cast<double>(rng.uniform_int(1, 40)) * q);
    for (int k = 0; k < 4; ++k) {
      const double p = q * static_cast<double>(rng.uniform_int(1, 6));
      const auto f = testing::random_uniform_function(
          rng, p, static_cast<std::size_t>(rng.uniform_int(1, 6)), 20.0, true);
      const auto fast = add_uniform(prof, f);
      const auto slow = brute_add_uniform(prof, f);
      if (fast.minweight != slow.minweight) {
        return fail("add_uniform differs from brute force on trial " + std::to_string(trial));
      }
      prof = fast;
    }
  }
  return {};
}

Check suite_towers() {
  for (double eps : {1.0 / 64.0}) {
    for (std::size_t d = 1; d <= 2; ++d) {
      for (const auto& params : testing::tower_schedules(eps, d)) {
        const auto base = construct_base_set(params);
        auto c = testing::hitting_guarantee(base, params);
        if (!c.ok) return c;
        c = testing::tower_invariants(generate_tower(base, params), params);
        if (!c.ok) return c;
      }
    }
  }
  return {};
}

Check suite_subsetsum() {
  SplitMix64 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(0, 12));
    std::vector<double> w(n);
    for (auto& a : w) a = rng.uniform_real(1.0, 10.0);
    const double W = rng.uniform_real(1.0, 40.0);
    const double eps = rng.uniform_real(0.05, 0.5);
    const auto sketch = subset_sum_sketch(w, W, eps);
    const auto sums = brute_subset_sums(w);
    for (double v : sketch.values) {
      const double tol = 1e-9 * std::max(1.0, v);
      auto it = std::lower_bound(sums.begin(), sums.end(), v - tol);
      if (it == sums.end() || *it > v + tol) return fail("unattainable sketch value");
    }
    for (double s : sums) {
      if (s > W) break;
      auto it = std::upper_bound(sketch.values.begin(), sketch.values.end(), s);
      if (it == sketch.values.begin() || *std::prev(it) < s - eps * W) {
        return fail("attainable sum not covered on trial " + std::to_string(trial));
      }
    }
  }
  return {};
}

Check suite_greedy() {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_gap_config(rng, 8, 8);
    double W = 0.0;
    for (const auto& it : g.H) W += it.weight;
    std::vector<double> xs;
    for (int k = 0; k <= 20; ++k) xs.push_back(W * k / 20.0);
    if (!greedy_lemma_check(g.H, g.L, g.alpha, xs)) {
      return fail("greedy lemma equality failed on trial " + std::to_string(trial));
    }
  }
  return {};
}

Check suite_solver() {
  SplitMix64 rng(505);
  Check total;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_small_instance(rng, static_cast<std::size_t>(rng.uniform_int(1, 10)), 100, 100.0);
    const double eps = 0.2;
    const auto result = solve(inst, eps);
    const double opt = brute_force_profile(inst.items)(inst.capacity);
    if (result.value > opt * (1.0 + 1e-9) || opt > (1.0 + eps) * (1.0 + 1e-9) * result.value) {
      return fail("ratio bound violated on trial " + std::to_string(trial));
    }
    if (result.value > 0.0) total.worst = std::max(total.worst, opt / result.value);
  }
  return total;
}

Check suite_oracle() {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_small_instance(rng, static_cast<std::size_t>(rng.uniform_int(0, 12)), 30, 50.0);
    const auto brute = brute_force_profile(inst.items);
    const auto dp = dp_profile(inst.items, 200);
    for (int x = 0; x <= 200; ++x) {
      if (std::abs(brute(x) - dp(x)) > 1e-9 * std::max(1.0, brute(x))) {
        return fail("dp and brute force disagree on trial " + std::to_string(trial));
      }
    }
  }
  return {};
}

}  // namespace

std::vector<std::string> selftest_suites() {
  return {"smawk", "uniform", "towers", "subsetsum", "greedy", "solver", "oracle"};
}

int run_selftest(const SelftestOptions& opts, std::ostream& out) {
  const auto names = selftest_suites();
  if (!opts.suite.empty() && std::find(names.begin(), names.end(), opts.suite) == names.end()) {
    throw std::invalid_argument("unknown suite: " + opts.suite);
  }
  if (!opts.corrupt.empty() && opts.corrupt != "smawk") {
    throw std::invalid_argument("unknown corruption target: " + opts.corrupt);
  }
  bool all = true;
  for (const auto& name : names) {
    if (!opts.suite.empty() && name != opts.suite) continue;
    Check c;
    try {
      if (name == "smawk") c = suite_smawk(opts.corrupt == "smawk");
      if (name == "uniform") c = suite_uniform();
      if (name == "towers") c = suite_towers();
      if (name == "subsetsum") c = suite_subsetsum();
      if (name == "greedy") c = suite_greedy();
      if (name == "solver") c = suite_solver();
      if (name == "oracle") c = suite_oracle();
    } catch (const std::exception& e) {
      c = fail(std::string("exception: ") + e.what());
    }
    all = all && c.ok;
    out << "suite " << name << ": " << (c.ok ? "pass" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace knapsack
