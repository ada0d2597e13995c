#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace knapsack {

namespace detail {

template <class KeyFn, class Better>
void smawk_solve(const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, const KeyFn& key,
                 const Better& better, std::vector<std::size_t>& result) {
  if (rows.empty()) return;

  // Reduce: keep at most |rows| columns that can still be a row optimum.
  std::vector<std::size_t> live;
  live.reserve(std::min(rows.size(), cols.size()));
  for (std::size_t c : cols) {
    while (!live.empty()) {
      const std::size_t r = rows[live.size() - 1];
      if (better(key(r, c), key(r, live.back()))) {
        live.pop_back();
      } else {
        break;
      }
    }
    if (live.size() < rows.size()) live.push_back(c);
  }

  std::vector<std::size_t> odd;
  odd.reserve(rows.size() / 2);
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk_solve(odd, live, key, better, result);

  // Interpolate even rows between the optima of their odd neighbours.
  std::size_t j = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const std::size_t stop =
        i + 1 < rows.size() ? result[rows[i + 1]] : live.back();
    std::size_t best = live[j];
    auto best_key = key(rows[i], best);
    while (live[j] != stop) {
      ++j;
      auto k = key(rows[i], live[j]);
      if (better(k, best_key)) {
        best = live[j];
        best_key = std::move(k);
      }
    }
    result[rows[i]] = best;
  }
}

}  // namespace detail

/// Row optima of a totally monotone matrix given by key(row, col). `better(a,
/// b)` is a strict preference; ties go to the smallest column. The leftmost
/// optimum column must be nondecreasing in the row index on every submatrix.
template <class KeyFn, class Better>
std::vector<std::size_t> smawk_rows(std::size_t rows, std::size_t cols,
                                    const KeyFn& key, const Better& better) {
  if (rows == 0 || cols == 0) return {};
  std::vector<std::size_t> row_ids(rows);
  std::vector<std::size_t> col_ids(cols);
  for (std::size_t i = 0; i < rows; ++i) row_ids[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_ids[j] = j;
  std::vector<std::size_t> result(rows, 0);
  detail::smawk_solve(row_ids, col_ids, key, better, result);
  return result;
}

/// Per-row argmax column (smallest column on ties) of a matrix that is
/// totally monotone for row maxima.
std::vector<std::size_t> smawk_argmax(
    std::size_t rows, std::size_t cols,
    const std::function<double(std::size_t, std::size_t)>& value);

}  // namespace knapsack
