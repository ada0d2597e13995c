#include "knapsack/testing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace knapsack::testing {

namespace {
constexpr double kWeightSlack = 1e-12;

std::string describe(const char* what, double x, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s at x=%.17g: %.17g vs %.17g", what, x, a, b);
  return buf;
}

}  // namespace

Matrix random_monotone_matrix(SplitMix64& rng, std::size_t max_dim) {
  Matrix m;
  m.rows = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_dim)));
  m.cols = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_dim)));
  std::vector<double> x(m.rows), y(m.cols), u(m.rows), v(m.cols);
  for (auto& a : x) a = rng.uniform_real(0.0, 100.0);
  for (auto& a : y) a = rng.uniform_real(0.0, 100.0);
  for (auto& a : u) a = rng.uniform_real(-50.0, 50.0);
  for (auto& a : v) a = rng.uniform_real(-50.0, 50.0);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  m.values.resize(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      m.values[i * m.cols + j] = u[i] + v[j] - (x[i] - y[j]) * (x[i] - y[j]);
    }
  }
  return m;
}

UniformFunction random_uniform_function(SplitMix64& rng, double profit,
                                        std::size_t count, double wmax,
                                        bool integer_weights) {
  std::vector<double> w(count);
  for (auto& a : w) {
    a = integer_weights
            ? static_cast<double>(rng.uniform_int(1, static_cast<std::int64_t>(wmax)))
            : rng.uniform_real(1.0, wmax);
  }
  return UniformFunction::from_weights(profit, std::move(w));
}

GapConfig random_gap_config(SplitMix64& rng, std::size_t max_h, std::size_t max_l) {
  GapConfig g;
  g.alpha = rng.uniform_real(0.05, 0.9);
  const auto h = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_h)));
  const auto l = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_l)));
  double q = 1e300;
  for (std::size_t i = 0; i < h; ++i) {
    const Item it{rng.uniform_real(0.5, 4.0), rng.uniform_real(1.0, 2.0)};
    q = std::min(q, it.unit_profit());
    g.H.push_back(it);
  }
  const double ceiling = q * (1.0 - g.alpha);
  for (std::size_t i = 0; i < l; ++i) {
    const double p = rng.uniform_real(1.0, 2.0);
    const double unit = ceiling * rng.uniform_real(0.2, 1.0);
    g.L.push_back({p / unit * (1.0 + 1e-12), p});
  }
  return g;
}

Check sandwich(const StepFunction& approx, const StepFunction& exact, double eps) {
  Check c;
  std::vector<double> xs;
  for (const auto& pt : approx.points()) xs.push_back(pt.x);
  for (const auto& pt : exact.points()) xs.push_back(pt.x);
  // Breakpoints reached through different summation orders can differ in
  // the last ulp, so the weight is given a relative slack in both checks.
  for (double x : xs) {
    const double xs_up = x * (1.0 + kWeightSlack) + kWeightSlack;
    const double a = approx(x);
    const double f = exact(xs_up);
    if (a > f * (1.0 + 1e-9) + 1e-12) {
      c.ok = false;
      c.detail = describe("approximation above exact", x, a, f);
      return c;
    }
    const double fx = exact(x);
    const double ax = approx(xs_up);
    if (fx > 0.0) {
      const double ratio = ax > 0.0 ? fx / ax : 1e300;
      c.worst = std::max(c.worst, ratio);
      if (fx > (1.0 + eps) * (1.0 + 1e-9) * ax) {
        c.ok = false;
        c.detail = describe("exact above (1+eps) approximation", x, fx, ax);
        return c;
      }
    }
  }
  return c;
}

Check hitting_guarantee(std::span<const double> base, const TowerParams& params) {
  Check c;
  const SetTower tower = generate_tower(base, params);
  for (double p : profit_grid(params.eps)) {
    bool hit = false;
    for (double y : tower.top()) {
      const double k = std::floor(p / y * (1.0 + 1e-12));
      if (k >= 1.0 && k * y >= p - params.eps * (1.0 + 1e-9)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      c.ok = false;
      char buf[96];
      std::snprintf(buf, sizeof buf, "profit %.17g has no multiple in [p-eps, p]", p);
      c.detail = buf;
      return c;
    }
  }
  return c;
}

Check tower_invariants(const SetTower& tower, const TowerParams& params) {
  Check c;
  auto fail = [&](const std::string& why) {
    c.ok = false;
    c.detail = why;
    return c;
  };
  const double d1 = params.deltas[0];
  const double base_size = static_cast<double>(tower.base().size());
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    const double di = params.deltas[i];
    const auto& level = tower.levels[i];
    for (double z : level) {
      if (z < di * (1.0 - 1e-9) || z > 8.0 * di * (1.0 + 1e-9)) {
        return fail("level element outside its band");
      }
    }
    const double bound = std::pow(8.0, static_cast<double>(i)) * (di / d1) * base_size;
    if (static_cast<double>(level.size()) > bound * (1.0 + 1e-9)) {
      return fail("level size bound violated");
    }
    if (i == 0) continue;
    // Recompute the level by definition.
    std::vector<double> expect;
    for (double z : tower.levels[i - 1]) {
      for (double k = std::ceil(di / z * (1.0 - 1e-12)); k * z <= 8.0 * di * (1.0 + 1e-12); k += 1.0) {
        if (k >= 1.0) expect.push_back(k * z);
      }
    }
    std::sort(expect.begin(), expect.end());
    std::vector<double> dedup;
    for (double v : expect) {
      if (dedup.empty() || v > dedup.back() * (1.0 + 1e-12)) dedup.push_back(v);
    }
    if (dedup.size() != level.size()) return fail("recurrence not reproduced");
    for (std::size_t k = 0; k < dedup.size(); ++k) {
      if (std::abs(dedup[k] - level[k]) > 1e-12 * level[k]) {
        return fail("recurrence not reproduced");
      }
    }
  }
  for (double y : tower.top()) {
    const auto chain = find_generator(y, tower);
    if (chain.size() != tower.depth() || std::abs(chain.back() - y) > 1e-12 * y) {
      return fail("generator chain does not end at y");
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const double ratio = chain[i + 1] / chain[i];
      if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
        return fail("generator chain ratio is not an integer");
      }
    }
    if (std::find(tower.base().begin(), tower.base().end(), chain.front()) ==
        tower.base().end()) {
      return fail("generator not in the base set");
    }
  }
  return c;
}

std::vector<TowerParams> tower_schedules(double eps, std::size_t d) {
  std::vector<TowerParams> out;
  for (double c : {1.0, 2.0}) {
    for (double ratio : {2.0, 4.0}) {
      TowerParams p;
      p.eps = eps;
      double delta = c * eps;
      for (std::size_t i = 0; i < d; ++i) {
        p.deltas.push_back(delta);
        delta *= ratio;
      }
      if (p.valid()) out.push_back(p);
    }
  }
  return out;
}

}  // namespace knapsack::testing
