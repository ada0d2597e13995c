#include "knapsack/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace knapsack {

double ProfitGroup::scale() const { return std::ldexp(1.0, exponent); }

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t expected = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string extra;
    if (!have_header) {
      double n = 0.0;
      double cap = 0.0;
      if (!(ls >> n >> cap) || (ls >> extra)) {
        throw ParseError(lineno, "expected header `n W`");
      }
      if (n < 0 || n != std::floor(n)) {
        throw ParseError(lineno, "item count must be a non-negative integer");
      }
      if (!(cap > 0.0) || !std::isfinite(cap)) {
        throw ParseError(lineno, "capacity must be positive");
      }
      expected = static_cast<std::size_t>(n);
      inst.capacity = cap;
      inst.items.reserve(expected);
      have_header = true;
      continue;
    }
    Item item;
    if (!(ls >> item.weight >> item.profit) || (ls >> extra)) {
      throw ParseError(lineno, "expected item line `w p`");
    }
    if (!(item.weight > 0.0) || !std::isfinite(item.weight)) {
      throw ParseError(lineno, "weight must be positive");
    }
    if (!(item.profit > 0.0) || !std::isfinite(item.profit)) {
      throw ParseError(lineno, "profit must be positive");
    }
    if (inst.items.size() == expected) {
      throw ParseError(lineno, "more items than declared in the header");
    }
    inst.items.push_back(item);
  }
  if (!have_header) throw ParseError(lineno, "missing header `n W`");
  if (inst.items.size() != expected) {
    throw ParseError(lineno, "expected " + std::to_string(expected) +
                                 " items, found " +
                                 std::to_string(inst.items.size()));
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  out.precision(17);
  out << inst.items.size() << ' ' << inst.capacity << '\n';
  for (const Item& it : inst.items) out << it.weight << ' ' << it.profit << '\n';
  return out.str();
}

double clamp_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2]");
  }
  if (eps > kMaxEpsilon) {
    std::cerr << "warning: epsilon " << eps << " clamped to " << kMaxEpsilon
              << '\n';
    return kMaxEpsilon;
  }
  return eps;
}

Instance preprocess(const Instance& inst, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("preprocess: epsilon must lie in (0, 1)");
  }
  Instance out;
  out.capacity = inst.capacity;
  std::vector<Item> fitting;
  fitting.reserve(inst.items.size());
  for (const Item& it : inst.items) {
    if (it.weight <= inst.capacity) fitting.push_back(it);
  }
  if (fitting.empty()) return out;

  double max_profit = 0.0;
  for (const Item& it : fitting) max_profit = std::max(max_profit, it.profit);
  // n counts the items that survived the weight filter.
  const double threshold =
      eps / static_cast<double>(fitting.size()) * max_profit;
  out.items.reserve(fitting.size());
  for (const Item& it : fitting) {
    if (it.profit > threshold) out.items.push_back(it);
  }
  return out;
}

std::vector<ProfitGroup> group_by_profit(const Instance& inst) {
  std::map<int, ProfitGroup> groups;
  for (const Item& it : inst.items) {
    int e = 0;
    const double mant = std::frexp(it.profit, &e);  // profit = mant * 2^e
    const int j = e - 1;
    auto& g = groups[j];
    g.exponent = j;
    g.items.push_back({it.weight, mant * 2.0});
  }
  std::vector<ProfitGroup> out;
  out.reserve(groups.size());
  for (auto& [j, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace knapsack
