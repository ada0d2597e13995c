#include "knapsack/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <tuple>

#include "knapsack/errors.hpp"
#include "knapsack/oracle.hpp"

namespace knapsack {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool integer_weights(const Instance& inst) {
  return std::all_of(inst.items.begin(), inst.items.end(),
                     [](const Item& it) { return it.weight == std::floor(it.weight); });
}

}  // namespace

bool is_algorithm(const std::string& name) {
  return name == "fptas" || name == "smalln" || name == "capped" ||
         name == "greedy" || name == "exact";
}

std::optional<double> exact_optimum(const Instance& inst) {
  if (inst.items.size() <= kBruteForceLimit) {
    return brute_force_profile(inst.items)(inst.capacity);
  }
  const double W = std::floor(inst.capacity);
  if (integer_weights(inst) &&
      static_cast<double>(inst.items.size()) * W <= kDpGuard) {
    return dp_profile(inst.items, static_cast<std::int64_t>(W))(W);
  }
  return std::nullopt;
}

SolveResult run_algorithm(const std::string& name, const Instance& inst, double eps) {
  if (name == "fptas") return solve(inst, eps);
  if (name == "smalln") return solve_small_n(inst, eps);
  if (name == "capped") return solve_capped(inst, eps);
  if (name == "greedy") return solve_greedy(inst);
  if (name == "exact") {
    SolveResult out;
    if (inst.items.size() <= kBruteForceLimit) {
      out.profile = brute_force_profile(inst.items);
    } else if (integer_weights(inst) &&
               static_cast<double>(inst.items.size()) * std::floor(inst.capacity) <= kDpGuard) {
      out.profile = dp_profile(inst.items, static_cast<std::int64_t>(std::floor(inst.capacity)));
    } else {
      throw OracleRefused("no exact oracle accepts this instance");
    }
    out.value = out.profile(inst.capacity);
    return out;
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::uint64_t instance_seed(std::size_t n, std::uint64_t seed) {
  SplitMix64 mix(seed * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
  return mix.next();
}

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
  for (const auto& a : opts.algorithms) {
    if (!is_algorithm(a)) throw std::invalid_argument("unknown algorithm: " + a);
  }
  std::vector<BenchRecord> records;
  for (std::size_t n : opts.ns) {
    for (std::uint64_t s = 1; s <= opts.seeds; ++s) {
      const Instance inst = generate_instance(n, opts.dist, instance_seed(n, s));
      std::optional<double> opt;
      if (opts.with_opt) opt = exact_optimum(inst);
      for (double eps : opts.epsilons) {
        for (const auto& alg : opts.algorithms) {
          BenchRecord rec;
          rec.n = n;
          rec.eps = eps;
          rec.algorithm = alg;
          rec.capacity = inst.capacity;
          rec.seed = s;
          const auto start = std::chrono::steady_clock::now();
          const auto result = run_algorithm(alg, inst, eps);
          const auto stop = std::chrono::steady_clock::now();
          rec.runtime_ms =
              std::chrono::duration<double, std::milli>(stop - start).count();
          rec.sol = result.value;
          if (opt) {
            rec.opt = *opt;
            if (rec.sol > 0.0) rec.ratio = *opt / rec.sol;
          }
          records.push_back(rec);
        }
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.n, a.eps, a.algorithm, a.seed) <
           std::tie(b.n, b.eps, b.algorithm, b.seed);
  });
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const auto& r : records) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_ms);
    out << r.n << ',' << fmt(r.eps) << ',' << r.algorithm << ',' << fmt(r.capacity)
        << ',' << fmt(r.sol) << ',' << (r.opt ? fmt(*r.opt) : "") << ','
        << (r.ratio ? fmt(*r.ratio) : "") << ',' << runtime << ',' << r.seed << '\n';
  }
}

}  // namespace knapsack
