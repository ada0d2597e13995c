#include "knapsack/smawk.hpp"

namespace knapsack {

std::vector<std::size_t> smawk_argmax(
    std::size_t rows, std::size_t cols,
    const std::function<double(std::size_t, std::size_t)>& value) {
  return smawk_rows(rows, cols, value,
                    [](double a, double b) { return a > b; });
}

}  // namespace knapsack
