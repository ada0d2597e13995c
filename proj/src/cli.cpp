#include "knapsack/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knapsack/bench.hpp"
#include "knapsack/errors.hpp"
#include "knapsack/selftest.hpp"
#include "knapsack/towers.hpp"

namespace knapsack {

namespace {

constexpr int kUsageError = 2;
constexpr int kOracleRefused = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SolveFlags {
  std::string input;
  double epsilon = 0.1;
  double capacity = -1.0;
  std::string algorithm = "fptas";
  std::string emit;
  bool verify = false;
};

int cmd_solve(const SolveFlags& f) {
  Instance inst = load_instance(f.input);
  if (f.capacity >= 0.0) inst.capacity = f.capacity;
  const auto result = run_algorithm(f.algorithm, inst, f.epsilon);
  std::cout << "SOL " << fmt(result.value) << '\n';
  if (!f.emit.empty()) {
    std::ofstream out(f.emit);
    if (!out) {
      std::cerr << "error: cannot write " << f.emit << '\n';
      return kUsageError;
    }
    write_step_function(out, result.profile);
  }
  if (f.verify) {
    const auto opt = exact_optimum(inst);
    if (!opt) {
      std::cerr << "error: instance too large for the exact oracles (n <= 20, or "
                   "integer weights with n*W <= 1e9)\n";
      return kOracleRefused;
    }
    std::cout << "OPT " << fmt(*opt) << '\n';
    std::cout << "RATIO " << fmt(result.value > 0.0 ? *opt / result.value : (*opt > 0 ? INFINITY : 1.0))
              << '\n';
    if (f.algorithm == "greedy") {
      double pmax = 0.0;
      for (const auto& it : inst.items) pmax = std::max(pmax, it.profit);
      std::cout << "GREEDY_GAP " << fmt(*opt - result.value) << " (bound " << fmt(pmax) << ")\n";
    }
  }
  return 0;
}

struct BenchFlags {
  std::vector<std::size_t> ns;
  std::vector<double> epsilons;
  std::size_t seeds = 1;
  std::string dist = "uniform";
  std::string out;
  std::vector<std::string> algorithms{"fptas"};
  bool no_opt = false;
};

int cmd_bench(const BenchFlags& f) {
  BenchOptions opts;
  opts.ns = f.ns;
  opts.epsilons = f.epsilons;
  opts.seeds = f.seeds;
  opts.dist = parse_distribution(f.dist);
  opts.algorithms = f.algorithms;
  opts.with_opt = !f.no_opt;
  std::ofstream out(f.out);
  if (!out) {
    std::cerr << "error: cannot write " << f.out << '\n';
    return kUsageError;
  }
  write_bench_csv(out, run_bench(opts));
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing " << f.out << '\n';
    return kUsageError;
  }
  return 0;
}

int cmd_towers(double eps, const std::vector<double>& deltas) {
  const TowerParams params{deltas, eps};
  const auto base = construct_base_set(params);
  const auto tower = generate_tower(base, params);
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    std::cout << "level " << (i + 1) << ':';
    for (double z : tower.levels[i]) std::cout << ' ' << fmt(z);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Approximate 0-1 knapsack via profit-function merging"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate one instance");
  solve_cmd->add_option("--input", solve_flags.input, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--epsilon", solve_flags.epsilon, "Approximation parameter in (0, 0.5]")
      ->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--capacity", solve_flags.capacity, "Override the instance capacity");
  solve_cmd->add_option("--algorithm", solve_flags.algorithm, "fptas|smalln|capped|greedy|exact")
      ->check(CLI::IsMember({"fptas", "smalln", "capped", "greedy", "exact"}));
  solve_cmd->add_option("--emit-function", solve_flags.emit, "Write the profile dump here");
  solve_cmd->add_flag("--verify", solve_flags.verify, "Compare against an exact oracle");

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark on generated instances");
  bench_cmd->add_option("--ns", bench_flags.ns, "Instance sizes")->required()->delimiter(',');
  bench_cmd->add_option("--epsilons", bench_flags.epsilons, "Epsilon values")->required()->delimiter(',');
  bench_cmd->add_option("--seeds", bench_flags.seeds, "Seeds per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--dist", bench_flags.dist, "uniform|correlated")
      ->check(CLI::IsMember({"uniform", "correlated"}));
  bench_cmd->add_option("--out", bench_flags.out, "CSV output path")->required();
  bench_cmd->add_option("--algorithms", bench_flags.algorithms, "Algorithms to run")
      ->delimiter(',')->check(CLI::IsMember({"fptas", "smalln", "capped", "greedy", "exact"}));
  bench_cmd->add_flag("--no-opt", bench_flags.no_opt, "Skip exact optima");

  SelftestOptions self_opts;
  auto* self_cmd = app.add_subcommand("selftest", "Run oracle and invariant suites");
  self_cmd->add_option("--suite", self_opts.suite, "Run one suite")
      ->check(CLI::IsMember(selftest_suites()));
  self_cmd->add_option("--corrupt", self_opts.corrupt, "Inject a fault (smawk)")
      ->check(CLI::IsMember({"smawk"}));

  double tower_eps = 1.0 / 64.0;
  std::vector<double> tower_deltas{0.125};
  auto* towers_cmd = app.add_subcommand("towers", "Dump a constructed set tower");
  towers_cmd->add_option("--epsilon", tower_eps, "Grid precision");
  towers_cmd->add_option("--deltas", tower_deltas, "Level widths")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_flags);
    if (*bench_cmd) return cmd_bench(bench_flags);
    if (*self_cmd) return run_selftest(self_opts, std::cout);
    if (*towers_cmd) return cmd_towers(tower_eps, tower_deltas);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OracleRefused& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracleRefused;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace knapsack
