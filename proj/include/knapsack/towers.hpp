#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace knapsack {

/// Level widths delta_1 < ... < delta_d and the additive precision eps.
/// Valid iff eps <= delta_1, delta_i <= delta_{i+1} / 2 and delta_d <= 1/8.
struct TowerParams {
  std::vector<double> deltas;
  double eps = 0.0;

  std::size_t depth() const { return deltas.size(); }
  bool valid() const;
  void validate() const;  // throws std::domain_error
};

/// Level i+1 is [delta_{i+1}, 8 delta_{i+1}] intersected with all integer
/// multiples of level i. parents[i][k] records how element k of level i was
/// generated from level i-1 (empty for level 0).
struct SetTower {
  struct Parent {
    std::size_t index = 0;
    std::int64_t multiplier = 0;
  };

  std::vector<std::vector<double>> levels;
  std::vector<std::vector<Parent>> parents;

  const std::vector<double>& base() const { return levels.front(); }
  const std::vector<double>& top() const { return levels.back(); }
  std::size_t depth() const { return levels.size(); }

  /// Chain z_1 in base, ..., z_d = top()[top_index] with integer ratios.
  std::vector<double> chain(std::size_t top_index) const;
};

SetTower generate_tower(std::span<const double> base, const TowerParams& params);

/// Generator chain x = z_1, ..., z_d = y for a member y of the top set.
/// Throws NotFoundError if y is not in the top set.
std::vector<double> find_generator(double y, const SetTower& tower);

struct GoodInteger {
  std::int64_t value = 0;
  /// k_1, ..., k_{d-1}, j with product == value.
  std::vector<std::int64_t> factors;
};

/// Integers K = k_1 ... k_{d-1} j with every prefix k_1...k_{i-1} in
/// [delta_i/delta_1, 2 delta_i/delta_1] and K in [p/(4 delta_1), p/(2
/// delta_1)], ascending, one witness factorization each.
std::vector<GoodInteger> enumerate_good_integers(double p,
                                                 const TowerParams& params);

/// Profit grid {1, 1+eps, ..., 1+floor(1/eps) eps}.
std::vector<double> profit_grid(double eps);

/// Greedy hitting set over the interval unions I_p, p in the profit grid.
/// The result lies in [delta_1, 4 delta_1] and every grid value p has a
/// top-set multiple in [p - eps, p].
std::vector<double> construct_base_set(const TowerParams& params);

/// construct_base_set, memoised on the exact parameter values.
std::shared_ptr<const std::vector<double>> cached_base_set(
    const TowerParams& params);

/// Largest multiple k*y <= p over y in `set`. Returns {0, npos, 0} if none.
struct MultipleChoice {
  double value = 0.0;
  std::size_t index = static_cast<std::size_t>(-1);
  std::int64_t multiplier = 0;
};
MultipleChoice best_multiple_below(double p, std::span<const double> set);

struct ProfitAssignment {
  std::size_t group = 0;
  double multiple = 0.0;  // k * top, the rounded profit
  std::int64_t k = 0;
  double top = 0.0;
  double generator = 0.0;
  std::vector<double> chain;  // z_1 = generator, ..., z_d = top
};

struct GroupedProfits {
  std::vector<double> base_set;  // Delta_1 after dropping unused generators
  std::vector<std::vector<double>> bases;
  std::vector<std::vector<std::size_t>> groups;  // indices into P
  std::vector<ProfitAssignment> assignments;     // one per element of P
  std::size_t D = 0;
  std::size_t chunk_size = 0;       // s = ceil(m / D)
  std::size_t chunks_per_group = 0;  // ceil(2D / r)

  std::size_t group_size_bound() const { return chunk_size * chunks_per_group; }
};

/// Partitions the profits into r groups of size O(m/r), each approximable by
/// multiples of the top set generated by its own base set. Requires
/// 1 <= r <= min(c * delta_1 / eps, m).
GroupedProfits partition_profits(std::span<const double> profits, std::size_t r,
                                 const TowerParams& params, double c = 1.0);

enum class CountMode { brute, tuples };

/// Counting utility for products n_1...n_d with every prefix product in
/// (T_i/2, T_i]. `brute` counts integers t <= T_d with such a factorization;
/// `tuples` counts ordered prime tuples with the same prefix condition.
std::uint64_t count_product_representable(std::span<const double> T,
                                          CountMode mode);

}  // namespace knapsack
