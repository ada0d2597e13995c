#include "knapsack/towers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "knapsack/errors.hpp"

namespace knapsack {

namespace {

constexpr double kDedupTol = 1e-12;
constexpr double kBandTol = 1e-9;

std::int64_t ceil_tight(double x) {
  return static_cast<std::int64_t>(std::ceil(x * (1.0 - kDedupTol)));
}
std::int64_t floor_tight(double x) {
  return static_cast<std::int64_t>(std::floor(x * (1.0 + kDedupTol)));
}

// Sorted values with near-duplicates (relative 1e-12) collapsed onto the
// first occurrence. Returns for each input position its representative.
std::vector<std::size_t> dedup_sorted(std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> out;
  std::vector<std::size_t> rep(values.size());
  for (std::size_t i : order) {
    if (out.empty() || values[i] > out.back() * (1.0 + kDedupTol)) {
      out.push_back(values[i]);
    }
    rep[i] = out.size() - 1;
  }
  values = std::move(out);
  return rep;
}

// Prefix products k_1...k_{d-1} with k_1...k_{i-1} in [delta_i/delta_1,
// 2 delta_i/delta_1], each with one witness factorization.
std::map<std::int64_t, std::vector<std::int64_t>> prefix_products(
    const TowerParams& params) {
  std::map<std::int64_t, std::vector<std::int64_t>> cur{{1, {}}};
  const double d1 = params.deltas[0];
  for (std::size_t i = 1; i < params.depth(); ++i) {
    const double lo = params.deltas[i] / d1;
    const double hi = 2.0 * params.deltas[i] / d1;
    std::map<std::int64_t, std::vector<std::int64_t>> next;
    for (const auto& [P, witness] : cur) {
      const std::int64_t kmin = std::max<std::int64_t>(1, ceil_tight(lo / P));
      const std::int64_t kmax = floor_tight(hi / P);
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        const std::int64_t Q = P * k;
        if (next.count(Q)) continue;
        auto w = witness;
        w.push_back(k);
        next.emplace(Q, std::move(w));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

bool TowerParams::valid() const {
  if (deltas.empty() || !(eps > 0.0)) return false;
  if (eps > deltas[0] * (1.0 + kDedupTol)) return false;
  for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
    if (deltas[i] > deltas[i + 1] / 2.0 * (1.0 + kDedupTol)) return false;
  }
  return deltas.back() <= 0.125 * (1.0 + kDedupTol);
}

void TowerParams::validate() const {
  if (!valid()) {
    throw std::domain_error(
        "tower parameters need eps <= delta_1, delta_i <= delta_{i+1}/2 and "
        "delta_d <= 1/8");
  }
}

std::vector<double> SetTower::chain(std::size_t top_index) const {
  std::vector<double> out(levels.size());
  std::size_t idx = top_index;
  for (std::size_t i = levels.size(); i-- > 0;) {
    out[i] = levels[i].at(idx);
    if (i > 0) idx = parents[i][idx].index;
  }
  return out;
}

SetTower generate_tower(std::span<const double> base,
                        const TowerParams& params) {
  params.validate();
  SetTower tower;
  std::vector<double> level0(base.begin(), base.end());
  dedup_sorted(level0);
  tower.levels.push_back(std::move(level0));
  tower.parents.emplace_back();
  for (std::size_t i = 1; i < params.depth(); ++i) {
    const double lo = params.deltas[i];
    const double hi = 8.0 * params.deltas[i];
    std::vector<double> values;
    std::vector<SetTower::Parent> from;
    const auto& prev = tower.levels.back();
    for (std::size_t j = 0; j < prev.size(); ++j) {
      const std::int64_t kmin =
          std::max<std::int64_t>(1, ceil_tight(lo / prev[j]));
      const std::int64_t kmax = floor_tight(hi / prev[j]);
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        values.push_back(static_cast<double>(k) * prev[j]);
        from.push_back({j, k});
      }
    }
    const auto rep = dedup_sorted(values);
    std::vector<SetTower::Parent> parents(values.size());
    std::vector<bool> set(values.size(), false);
    for (std::size_t t = 0; t < rep.size(); ++t) {
      if (!set[rep[t]]) {
        parents[rep[t]] = from[t];
        set[rep[t]] = true;
      }
    }
    tower.levels.push_back(std::move(values));
    tower.parents.push_back(std::move(parents));
  }
  return tower;
}

std::vector<double> find_generator(double y, const SetTower& tower) {
  const auto& top = tower.top();
  auto it = std::lower_bound(top.begin(), top.end(), y * (1.0 - kDedupTol));
  if (it == top.end() || *it > y * (1.0 + kDedupTol)) {
    throw NotFoundError("value is not in the top set of the tower");
  }
  return tower.chain(static_cast<std::size_t>(it - top.begin()));
}

std::vector<GoodInteger> enumerate_good_integers(double p,
                                                 const TowerParams& params) {
  // Only the ordering of the deltas matters here; the 1/8 ceiling is a
  // requirement of the tower, not of the counting.
  if (params.deltas.empty() || !(params.deltas[0] > 0.0)) {
    throw std::domain_error("good integers need positive deltas");
  }
  for (std::size_t i = 0; i + 1 < params.depth(); ++i) {
    if (params.deltas[i] > params.deltas[i + 1] / 2.0 * (1.0 + kDedupTol)) {
      throw std::domain_error("good integers need delta_i <= delta_{i+1}/2");
    }
  }
  const double d1 = params.deltas[0];
  std::map<std::int64_t, std::vector<std::int64_t>> found;
  for (const auto& [P, witness] : prefix_products(params)) {
    const std::int64_t jmin =
        std::max<std::int64_t>(1, ceil_tight(p / (4.0 * d1 * P)));
    const std::int64_t jmax = floor_tight(p / (2.0 * d1 * P));
    for (std::int64_t j = jmin; j <= jmax; ++j) {
      const std::int64_t K = P * j;
      if (found.count(K)) continue;
      auto w = witness;
      w.push_back(j);
      found.emplace(K, std::move(w));
    }
  }
  std::vector<GoodInteger> out;
  out.reserve(found.size());
  for (auto& [K, w] : found) out.push_back({K, std::move(w)});
  return out;
}

std::vector<double> profit_grid(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw std::domain_error("grid eps in (0,1]");
  const auto steps = static_cast<std::int64_t>(std::floor(1.0 / eps + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (std::int64_t k = 0; k <= steps; ++k) {
    out.push_back(1.0 + static_cast<double>(k) * eps);
  }
  return out;
}

std::vector<double> construct_base_set(const TowerParams& params) {
  params.validate();
  const double eps = params.eps;
  const double d1 = params.deltas[0];
  const auto grid = profit_grid(eps);
  const auto prefixes = prefix_products(params);

  struct Interval {
    double lo;
    double hi;
    std::size_t owner;
    std::size_t first = 0;  // candidate range [first, last)
    std::size_t last = 0;
  };
  std::vector<Interval> intervals;
  std::vector<std::size_t> owner_begin(grid.size() + 1, 0);
  std::vector<std::int64_t> Ks;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double p = grid[g];
    Ks.clear();
    for (const auto& entry : prefixes) {
      const std::int64_t P = entry.first;
      const std::int64_t jmin =
          std::max<std::int64_t>(1, ceil_tight(p / (4.0 * d1 * P)));
      const std::int64_t jmax = floor_tight(p / (2.0 * d1 * P));
      for (std::int64_t j = jmin; j <= jmax; ++j) Ks.push_back(P * j);
    }
    if (Ks.empty()) {
      throw ConstructionError(
          p, "no good integer for profit " + std::to_string(p));
    }
    // Descending K gives ascending intervals.
    std::sort(Ks.begin(), Ks.end(), std::greater<>());
    Ks.erase(std::unique(Ks.begin(), Ks.end()), Ks.end());
    owner_begin[g] = intervals.size();
    for (std::int64_t Ki : Ks) {
      const double K = static_cast<double>(Ki);
      const Interval iv{(p - eps) / K, p / K, g};
      if (intervals.size() > owner_begin[g] &&
          iv.lo < intervals.back().hi * (1.0 - kBandTol)) {
        throw ContractError("intervals of one profit overlap");
      }
      if (iv.lo < d1 * (1.0 - kBandTol) || iv.hi > 4.0 * d1 * (1.0 + kBandTol)) {
        throw ContractError("interval outside [delta_1, 4 delta_1]");
      }
      intervals.push_back(iv);
    }
  }
  owner_begin[grid.size()] = intervals.size();

  // Candidate points are the left endpoints.
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    order.emplace_back(intervals[i].lo, i);
  }
  std::sort(order.begin(), order.end());
  std::vector<double> cand;
  cand.reserve(order.size());
  for (const auto& [lo, i] : order) {
    if (cand.empty() || cand.back() != lo) cand.push_back(lo);
    intervals[i].first = cand.size() - 1;
  }
  std::vector<std::pair<double, std::size_t>>().swap(order);
  for (auto& iv : intervals) {
    // Gallop from the left end; intervals are short.
    std::size_t step = 1;
    std::size_t lo = iv.first;
    while (lo + step < cand.size() && cand[lo + step] <= iv.hi) {
      lo += step;
      step *= 2;
    }
    const auto stop = std::min(cand.size(), lo + step);
    iv.last = static_cast<std::size_t>(
        std::upper_bound(cand.begin() + static_cast<std::ptrdiff_t>(lo),
                         cand.begin() + static_cast<std::ptrdiff_t>(stop), iv.hi) -
        cand.begin());
  }

  // Greedy rounds: coverage of every candidate by the still-unhit profits is
  // rebuilt from a difference array, then the leftmost best point is taken.
  std::vector<bool> alive(grid.size(), true);
  std::size_t remaining = grid.size();
  std::vector<double> chosen;
  std::vector<std::int64_t> cover(cand.size() + 1);
  while (remaining > 0) {
    std::fill(cover.begin(), cover.end(), 0);
    for (const auto& iv : intervals) {
      ++cover[iv.first];
      --cover[iv.last];
    }
    std::size_t best = 0;
    std::int64_t best_count = 0;
    std::int64_t running = 0;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      running += cover[k];
      if (running > best_count) {
        best_count = running;
        best = k;
      }
    }
    if (best_count <= 0) throw ContractError("hitting set stalled");
    for (const auto& iv : intervals) {
      if (alive[iv.owner] && iv.first <= best && best < iv.last) {
        alive[iv.owner] = false;
        --remaining;
      }
    }
    std::erase_if(intervals, [&](const Interval& iv) { return !alive[iv.owner]; });
    chosen.push_back(cand[best]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::shared_ptr<const std::vector<double>> cached_base_set(
    const TowerParams& params) {
  static std::mutex mu;
  static std::map<std::pair<double, std::vector<double>>,
                  std::shared_ptr<const std::vector<double>>>
      cache;
  const auto key = std::pair{params.eps, params.deltas};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const std::vector<double>>(
      construct_base_set(params));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, built);
  return built;
}

MultipleChoice best_multiple_below(double p, std::span<const double> set) {
  MultipleChoice best;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const std::int64_t k = floor_tight(p / set[i]);
    if (k < 1) continue;
    const double v = static_cast<double>(k) * set[i];
    if (v > best.value) best = {v, i, k};
  }
  return best;
}

GroupedProfits partition_profits(std::span<const double> profits,
                                 std::size_t r, const TowerParams& params,
                                 double c) {
  params.validate();
  const std::size_t m = profits.size();
  const double limit = c * params.deltas[0] / params.eps;
  if (r < 1 || r > m || static_cast<double>(r) > limit * (1.0 + kBandTol)) {
    throw std::domain_error("group count r must satisfy 1 <= r <= min(c*delta_1/eps, m)");
  }
  const auto base_all = cached_base_set(params);
  const SetTower tower = generate_tower(*base_all, params);

  // All multiples of the top set that can be the rounding of a profit.
  struct Multiple {
    double value;
    std::size_t top;
    std::int64_t k;
  };
  std::vector<Multiple> multiples;
  const auto& top = tower.top();
  const double pmin = *std::min_element(profits.begin(), profits.end());
  const double pmax = *std::max_element(profits.begin(), profits.end());
  for (std::size_t i = 0; i < top.size(); ++i) {
    const std::int64_t kmin = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor((pmin - 3.0 * params.eps) / top[i])));
    const std::int64_t kmax = floor_tight(pmax / top[i]);
    for (std::int64_t k = kmin; k <= kmax; ++k) {
      multiples.push_back({static_cast<double>(k) * top[i], i, k});
    }
  }
  std::sort(multiples.begin(), multiples.end(),
            [](const Multiple& a, const Multiple& b) { return a.value < b.value; });

  GroupedProfits out;
  out.assignments.resize(m);
  std::map<std::size_t, std::vector<std::size_t>> buckets;  // base index
  for (std::size_t j = 0; j < m; ++j) {
    const double p = profits[j];
    auto it = std::upper_bound(
        multiples.begin(), multiples.end(), p * (1.0 + kDedupTol),
        [](double v, const Multiple& mu) { return v < mu.value; });
    if (it == multiples.begin()) {
      throw ContractError("profit has no top-set multiple below it");
    }
    --it;
    if (p - it->value > 2.0 * params.eps * (1.0 + kBandTol)) {
      throw ContractError("profit is not covered by the base set");
    }
    auto& a = out.assignments[j];
    a.multiple = it->value;
    a.k = it->k;
    a.top = top[it->top];
    a.chain = tower.chain(it->top);
    a.generator = a.chain.front();
    std::size_t base_idx = it->top;
    for (std::size_t lvl = tower.depth(); lvl-- > 1;) {
      base_idx = tower.parents[lvl][base_idx].index;
    }
    buckets[base_idx].push_back(j);
  }

  for (const auto& entry : buckets) {
    out.base_set.push_back(tower.base()[entry.first]);
  }
  out.D = std::max(r, buckets.size());
  out.chunk_size = (m + out.D - 1) / out.D;
  out.chunks_per_group = (2 * out.D + r - 1) / r;

  struct Chunk {
    std::size_t base;
    std::vector<std::size_t> members;
  };
  std::vector<Chunk> chunks;
  for (const auto& [base_idx, members] : buckets) {
    for (std::size_t s = 0; s < members.size(); s += out.chunk_size) {
      const std::size_t e = std::min(members.size(), s + out.chunk_size);
      chunks.push_back({base_idx, {members.begin() + static_cast<std::ptrdiff_t>(s),
                                   members.begin() + static_cast<std::ptrdiff_t>(e)}});
    }
  }
  const std::size_t C = chunks.size();
  out.groups.resize(r);
  out.bases.resize(r);
  for (std::size_t g = 0; g < r; ++g) {
    const std::size_t from = g * C / r;
    const std::size_t to = (g + 1) * C / r;
    std::set<std::size_t> bases;
    for (std::size_t ci = from; ci < to; ++ci) {
      bases.insert(chunks[ci].base);
      for (std::size_t j : chunks[ci].members) {
        out.groups[g].push_back(j);
        out.assignments[j].group = g;
      }
    }
    for (std::size_t b : bases) out.bases[g].push_back(tower.base()[b]);
  }
  return out;
}

namespace {

std::vector<std::int64_t> validated_chain(std::span<const double> T) {
  if (T.empty()) throw std::domain_error("T must be nonempty");
  if (T[0] < 2.0) throw std::domain_error("T_1 must be at least 2");
  for (std::size_t i = 0; i + 1 < T.size(); ++i) {
    if (T[i + 1] < 2.0 * T[i]) throw std::domain_error("T_{i+1} >= 2 T_i required");
  }
  if (T.back() > static_cast<double>(1 << 20)) {
    throw std::domain_error("T_d must be at most 2^20");
  }
  std::vector<std::int64_t> lo(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) {
    lo[i] = static_cast<std::int64_t>(std::floor(T[i] / 2.0));
  }
  return lo;
}

bool in_level(std::int64_t v, std::span<const double> T, std::size_t i) {
  const double x = static_cast<double>(v);
  return x > T[i] / 2.0 && x <= T[i];
}

bool factorizable(std::int64_t t, const std::vector<std::int64_t>& divisors,
                  std::span<const double> T, std::size_t level,
                  std::int64_t prefix) {
  if (level + 1 == T.size()) return in_level(t, T, level) && t % prefix == 0;
  for (std::int64_t dv : divisors) {
    if (dv % prefix != 0 || t % dv != 0) continue;
    if (!in_level(dv, T, level)) continue;
    if (factorizable(t, divisors, T, level + 1, dv)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t count_product_representable(std::span<const double> T,
                                          CountMode mode) {
  validated_chain(T);
  const auto top = static_cast<std::int64_t>(std::floor(T.back()));
  if (mode == CountMode::brute) {
    std::uint64_t count = 0;
    std::vector<std::int64_t> divisors;
    for (std::int64_t t = 1; t <= top; ++t) {
      if (!in_level(t, T, T.size() - 1)) continue;
      divisors.clear();
      for (std::int64_t a = 1; a * a <= t; ++a) {
        if (t % a != 0) continue;
        divisors.push_back(a);
        if (a != t / a) divisors.push_back(t / a);
      }
      std::sort(divisors.begin(), divisors.end());
      if (factorizable(t, divisors, T, 0, 1)) ++count;
    }
    return count;
  }
  std::vector<bool> composite(static_cast<std::size_t>(top) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t a = 2; a <= top; ++a) {
    if (composite[static_cast<std::size_t>(a)]) continue;
    primes.push_back(a);
    for (std::int64_t b = a * a; b <= top; b += a) composite[static_cast<std::size_t>(b)] = true;
  }
  std::map<std::int64_t, std::uint64_t> cur{{1, 1}};
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::map<std::int64_t, std::uint64_t> next;
    for (const auto& [P, ways] : cur) {
      for (std::int64_t q : primes) {
        const std::int64_t v = P * q;
        if (static_cast<double>(v) > T[i]) break;
        if (in_level(v, T, i)) next[v] += ways;
      }
    }
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& entry : cur) total += entry.second;
  return total;
}

}  // namespace knapsack
