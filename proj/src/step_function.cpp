#include "knapsack/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knapsack {

StepFunction StepFunction::from_points(std::vector<StepPoint> points) {
  std::sort(points.begin(), points.end(),
            [](const StepPoint& a, const StepPoint& b) {
              return a.x < b.x || (a.x == b.x && a.y > b.y);
            });
  std::vector<StepPoint> out;
  out.reserve(points.size());
  double best = 0.0;
  for (const StepPoint& p : points) {
    if (p.y > best) {
      if (!out.empty() && out.back().x == p.x) {
        out.back().y = p.y;
      } else {
        out.push_back(p);
      }
      best = p.y;
    }
  }
  return StepFunction(std::move(out));
}

StepFunction StepFunction::from_canonical(std::vector<StepPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool ok = points[i].x >= 0.0 && points[i].y > 0.0 &&
                    (i == 0 || (points[i].x > points[i - 1].x &&
                                points[i].y > points[i - 1].y));
    if (!ok) throw std::invalid_argument("step function is not canonical");
  }
  return StepFunction(std::move(points));
}

double StepFunction::operator()(double x) const {
  if (x < 0.0) throw std::domain_error("step function evaluated at x < 0");
  auto it = std::upper_bound(
      points_.begin(), points_.end(), x,
      [](double v, const StepPoint& p) { return v < p.x; });
  if (it == points_.begin()) return 0.0;
  return std::prev(it)->y;
}

double StepFunction::min_positive_value() const {
  return points_.empty() ? 0.0 : points_.front().y;
}

StepFunction StepFunction::scaled_values(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale must be positive");
  std::vector<StepPoint> out(points_);
  for (StepPoint& p : out) p.y *= factor;
  return from_points(std::move(out));
}

double eval(const StepFunction& f, double x) { return f(x); }

StepFunction cap(const StepFunction& f, double bound) {
  if (!(bound > 0.0)) throw std::invalid_argument("cap bound must be positive");
  std::vector<StepPoint> out;
  for (const StepPoint& p : f.points()) {
    if (p.y >= bound) {
      out.push_back({p.x, bound});
      break;
    }
    out.push_back(p);
  }
  return StepFunction::from_canonical(std::move(out));
}

StepFunction pointwise_max(const StepFunction& f, const StepFunction& g) {
  auto a = f.points();
  auto b = g.points();
  std::vector<StepPoint> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double best = 0.0;
  while (i < a.size() || j < b.size()) {
    StepPoint next;
    if (j == b.size() || (i < a.size() && a[i].x < b[j].x)) {
      next = a[i++];
    } else if (i == a.size() || b[j].x < a[i].x) {
      next = b[j++];
    } else {
      next = {a[i].x, std::max(a[i].y, b[j].y)};
      ++i;
      ++j;
    }
    if (next.y > best) {
      out.push_back(next);
      best = next.y;
    }
  }
  return StepFunction::from_canonical(std::move(out));
}

namespace {

double round_value_down(double v, double base, double lowest) {
  if (v <= 0.0) return 0.0;
  if (v < lowest * (1.0 - 1e-12)) {
    throw std::domain_error("round_down_powers: value below the lowest level");
  }
  if (v <= lowest) return v;
  auto level = [&](long k) { return lowest * std::pow(base, k); };
  long k = static_cast<long>(std::floor(std::log(v / lowest) / std::log(base)));
  k = std::max(k, 0L);
  while (k > 0 && level(k) > v) --k;
  while (level(k + 1) <= v) ++k;
  return std::min(v, level(k));
}

}  // namespace

StepFunction round_down_powers(const StepFunction& f, double eps,
                               double lowest) {
  if (!(lowest > 0.0)) {
    throw std::domain_error("round_down_powers: lowest level must be positive");
  }
  if (!(eps > 0.0)) throw std::domain_error("round_down_powers: eps <= 0");
  const double base = 1.0 + eps;
  std::vector<StepPoint> out;
  out.reserve(f.complexity());
  for (const StepPoint& p : f.points()) {
    out.push_back({p.x, round_value_down(p.y, base, lowest)});
  }
  return StepFunction::from_points(std::move(out));
}

namespace {

// Upper envelope of two canonical point lists.
std::vector<StepPoint> envelope(const std::vector<StepPoint>& a,
                                const std::vector<StepPoint>& b) {
  std::vector<StepPoint> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double best = 0.0;
  while (i < a.size() || j < b.size()) {
    StepPoint next;
    if (j == b.size() || (i < a.size() && a[i].x < b[j].x)) {
      next = a[i++];
    } else if (i == a.size() || b[j].x < a[i].x) {
      next = b[j++];
    } else {
      next = {a[i].x, std::max(a[i].y, b[j].y)};
      ++i;
      ++j;
    }
    if (next.y > best) {
      out.push_back(next);
      best = next.y;
    }
  }
  return out;
}

// Envelope of b shifted by a[lo..hi), merged as a balanced tree so dominated
// points are pruned early.
std::vector<StepPoint> shifted_envelope(const std::vector<StepPoint>& a,
                                        const std::vector<StepPoint>& b,
                                        std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    std::vector<StepPoint> out;
    out.reserve(b.size());
    for (const StepPoint& q : b) {
      const StepPoint s{a[lo].x + q.x, a[lo].y + q.y};
      if (s.y > 0.0 && (out.empty() || s.y > out.back().y)) {
        if (!out.empty() && s.x == out.back().x) {
          out.back() = s;
        } else {
          out.push_back(s);
        }
      }
    }
    return out;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return envelope(shifted_envelope(a, b, lo, mid), shifted_envelope(a, b, mid, hi));
}

}  // namespace

StepFunction exact_maxplus(const StepFunction& f, const StepFunction& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  // Both operands are augmented with the origin so that f and g themselves
  // appear among the candidate sums.
  std::vector<StepPoint> a{{0.0, 0.0}};
  a.insert(a.end(), f.points().begin(), f.points().end());
  std::vector<StepPoint> b{{0.0, 0.0}};
  b.insert(b.end(), g.points().begin(), g.points().end());
  if (a.size() > b.size()) std::swap(a, b);
  return StepFunction::from_canonical(shifted_envelope(a, b, 0, a.size()));
}

double min_positive_value(std::span<const StepFunction> fs) {
  double best = 0.0;
  for (const StepFunction& f : fs) {
    if (f.is_zero()) continue;
    const double v = f.min_positive_value();
    if (best == 0.0 || v < best) best = v;
  }
  return best;
}

double split_budget(double eps, int layers) {
  if (layers <= 1) return eps;
  return std::expm1(std::log1p(eps) / layers);
}

namespace {

StepFunction merge_range(std::span<const StepFunction> fs, double layer_eps,
                         double lowest, double upto) {
  if (fs.size() == 1) return round_down_powers(cap(fs[0], upto), layer_eps, lowest);
  const std::size_t mid = fs.size() / 2;
  StepFunction left = merge_range(fs.first(mid), layer_eps, lowest, upto);
  StepFunction right = merge_range(fs.subspan(mid), layer_eps, lowest, upto);
  return round_down_powers(cap(exact_maxplus(left, right), upto), layer_eps, lowest);
}

int ceil_log2(std::size_t m) {
  int k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

}  // namespace

StepFunction merge_dnc(std::span<const StepFunction> fs, double eps,
                       double lowest, double highest, double upto) {
  if (fs.empty()) return {};
  if (!(eps > 0.0)) throw std::domain_error("merge_dnc: eps must be positive");
  if (!(lowest > 0.0) || highest < lowest) {
    throw std::domain_error("merge_dnc: invalid value range");
  }
  for (const StepFunction& f : fs) {
    if (f.is_zero()) continue;
    if (f.min_positive_value() < lowest * (1.0 - 1e-12) ||
        f.max_value() > highest * (1.0 + 1e-12)) {
      throw std::domain_error("merge_dnc: input outside {0} u [lowest, highest]");
    }
  }
  const int layers = ceil_log2(fs.size()) + 1;
  if (!(upto > 0.0)) throw std::domain_error("merge_dnc: cap must be positive");
  // A cap below the lowest level would leave values off the rounding grid;
  // capping at `lowest` instead still gives min{upto, .} after the caller's cap.
  return merge_range(fs, split_budget(eps, layers), lowest, std::max(upto, lowest));
}

void write_step_function(std::ostream& out, const StepFunction& f) {
  const auto old = out.precision(17);
  for (const StepPoint& p : f.points()) out << p.x << ' ' << p.y << '\n';
  out.precision(old);
}

StepFunction read_step_function(std::istream& in) {
  std::vector<StepPoint> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    StepPoint p;
    if (!(ls >> p.x >> p.y)) throw std::runtime_error("bad step function line");
    pts.push_back(p);
  }
  return StepFunction::from_points(std::move(pts));
}

}  // namespace knapsack
