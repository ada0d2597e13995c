#pragma once

#include <cstdint>
#include <string>

#include "knapsack/instance.hpp"

namespace knapsack {

/// SplitMix64: fixed 64-bit mixing generator, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [0, 1).
  double uniform01();
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

enum class Distribution { uniform, correlated };

Distribution parse_distribution(const std::string& name);
std::string to_string(Distribution dist);

/// n items with integer weights and profits in [1, 10^4] (correlated:
/// p = w + noise in [1, 1000]); capacity is half the total weight.
Instance generate_instance(std::size_t n, Distribution dist, std::uint64_t seed);

/// Small instance for oracle tests: n items, integer weights in [1, wmax],
/// real profits in [1, pmax], capacity uniform in [1, total weight].
Instance random_small_instance(SplitMix64& rng, std::size_t n, std::int64_t wmax,
                               double pmax);

/// FNV-1a hash over the serialized instance.
std::uint64_t instance_hash(const Instance& inst);

}  // namespace knapsack
