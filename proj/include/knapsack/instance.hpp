#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knapsack {

struct Item {
  double weight = 0.0;
  double profit = 0.0;

  double unit_profit() const { return profit / weight; }
  friend bool operator==(const Item&, const Item&) = default;
};

struct Instance {
  std::vector<Item> items;
  double capacity = 0.0;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
};

/// Items whose original profits lie in [2^exponent, 2^(exponent+1)), rescaled
/// into [1, 2). Multiply values by scale() to restore original profits.
struct ProfitGroup {
  int exponent = 0;
  std::vector<Item> items;

  double scale() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the text instance format: `#` comment lines, a header `n W`, then
/// n lines `w p`.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

std::string format_instance(const Instance& inst);

/// Largest epsilon accepted by the solvers; larger values are clamped.
inline constexpr double kMaxEpsilon = 0.5;

/// Validates eps > 0 and clamps it to kMaxEpsilon (with a warning on stderr).
double clamp_epsilon(double eps);

/// Drops items heavier than the capacity and items with
/// p <= (eps / n) * max p. Loses at most a factor 1+eps of the optimum at
/// the capacity.
Instance preprocess(const Instance& inst, double eps);

/// Splits items by the binary exponent of their profit. A profit of exactly
/// 2^(j+1) belongs to group j+1 with rescaled profit 1. Groups are ordered by
/// exponent.
std::vector<ProfitGroup> group_by_profit(const Instance& inst);

}  // namespace knapsack
