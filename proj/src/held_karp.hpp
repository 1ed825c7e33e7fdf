#pragma once

// Held-Karp dynamic program over an exact cost type (std::int64_t or
// Integer). Shared by the walk oracle and the exact TSP routine.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "gapbound/graph.hpp"

namespace gapbound::detail {

template <class T>
struct TourResult {
  T cost;
  std::vector<Node> order;  // starts at node 0
};

template <class T>
TourResult<T> held_karp(const std::vector<std::vector<T>>& d) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return {T(0), {0}};
  if (n == 2) return {d[0][1] + d[1][0], {0, 1}};
  const int m = n - 1;  // nodes 1..n-1 live at bit (v - 1)
  const std::size_t states = std::size_t{1} << m;
  std::vector<std::optional<T>> best(states * m);
  std::vector<std::int8_t> parent(states * m, -1);
  for (int j = 0; j < m; ++j) best[(std::size_t{1} << j) * m + j] = d[0][j + 1];
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const auto& here = best[mask * m + j];
      if (!here) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        const std::size_t next = mask | (std::size_t{1} << k);
        T cand = *here + d[j + 1][k + 1];
        auto& slot = best[next * m + k];
        if (!slot || cand < *slot) {
          slot = std::move(cand);
          parent[next * m + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  const std::size_t full = states - 1;
  std::optional<T> total;
  int last = -1;
  for (int j = 0; j < m; ++j) {
    T cand = *best[full * m + j] + d[j + 1][0];
    if (!total || cand < *total) {
      total = std::move(cand);
      last = j;
    }
  }
  std::vector<Node> order;
  std::size_t mask = full;
  int cur = last;
  while (cur >= 0) {
    order.push_back(cur + 1);
    const int prev = parent[mask * m + cur];
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return {*total, order};
}

}  // namespace gapbound::detail
