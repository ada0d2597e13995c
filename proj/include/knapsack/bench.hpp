#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knapsack/random.hpp"
#include "knapsack/solver.hpp"

namespace knapsack {

inline constexpr const char* kBenchHeader =
    "n,eps,alg,capacity,sol,opt,ratio,runtime_ms,seed";

struct BenchRecord {
  std::size_t n = 0;
  double eps = 0.0;
  std::string algorithm;
  double capacity = 0.0;
  double sol = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  std::vector<std::size_t> ns;
  std::vector<double> epsilons;
  std::size_t seeds = 1;
  Distribution dist = Distribution::uniform;
  std::vector<std::string> algorithms{"fptas"};
  /// Compute OPT with an exact oracle when the instance fits one.
  bool with_opt = true;
};

/// Known algorithm names: fptas, smalln, capped, greedy, exact.
bool is_algorithm(const std::string& name);

/// Runs one named algorithm. `exact` throws OracleRefused when no oracle
/// fits the instance.
SolveResult run_algorithm(const std::string& name, const Instance& inst, double eps);

/// Exact optimum at the capacity if an oracle accepts the instance.
std::optional<double> exact_optimum(const Instance& inst);

/// Seed used to generate the instance of cell (n, seed).
std::uint64_t instance_seed(std::size_t n, std::uint64_t seed);

/// One record per (n, eps, seed, algorithm), sorted by those keys.
std::vector<BenchRecord> run_bench(const BenchOptions& opts);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace knapsack
