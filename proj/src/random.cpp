#include "knapsack/random.hpp"

#include <cmath>
#include <stdexcept>

namespace knapsack {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::uniform;
  if (name == "correlated") return Distribution::correlated;
  throw std::invalid_argument("unknown distribution: " + name);
}

std::string to_string(Distribution dist) {
  return dist == Distribution::uniform ? "uniform" : "correlated";
}

Instance generate_instance(std::size_t n, Distribution dist, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst;
  inst.items.reserve(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<double>(rng.uniform_int(1, 10000));
    double p;
    if (dist == Distribution::uniform) {
      p = static_cast<double>(rng.uniform_int(1, 10000));
    } else {
      p = w + static_cast<double>(rng.uniform_int(1, 1000));
    }
    inst.items.push_back({w, p});
    total += w;
  }
  inst.capacity = std::floor(total / 2.0);
  return inst;
}

Instance random_small_instance(SplitMix64& rng, std::size_t n, std::int64_t wmax,
                               double pmax) {
  Instance inst;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<double>(rng.uniform_int(1, wmax));
    inst.items.push_back({w, rng.uniform_real(1.0, pmax)});
    total += w;
  }
  inst.capacity = static_cast<double>(
      rng.uniform_int(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(total))));
  return inst;
}

std::uint64_t instance_hash(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace knapsack
