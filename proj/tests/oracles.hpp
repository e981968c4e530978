#pragma once

// Brute-force reference computations, deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// Every filling of the diagram with 1..k, keeping the semistandard ones.
inline std::uint64_t ssyt_count(const std::vector<int>& shape, int k) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.push_back({i, j});
  std::map<std::pair<int, int>, int> fill;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      for (auto [cell, v] : fill) {
        auto right = fill.find({cell.first, cell.second + 1});
        if (right != fill.end() && right->second < v) return;
        auto below = fill.find({cell.first + 1, cell.second});
        if (below != fill.end() && below->second <= v) return;
      }
      ++count;
      return;
    }
    for (int v = 1; v <= k; ++v) {
      fill[cells[c]] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return count;
}

/// Standard tableaux counted over all bijections cells -> 1..n.
inline std::uint64_t standard_count(const std::vector<int>& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.push_back({i, j});
  std::vector<int> values(cells.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<int>(i) + 1;
  std::uint64_t count = 0;
  do {
    std::map<std::pair<int, int>, int> fill;
    for (std::size_t i = 0; i < cells.size(); ++i) fill[cells[i]] = values[i];
    bool ok = true;
    for (auto [cell, v] : fill) {
      auto right = fill.find({cell.first, cell.second + 1});
      auto below = fill.find({cell.first + 1, cell.second});
      if ((right != fill.end() && right->second <= v) || (below != fill.end() && below->second <= v)) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  return count;
}

/// Number of monomials of the given degree in nvars variables, by recursion.
inline std::uint64_t monomial_count(int nvars, int degree) {
  if (degree == 0) return 1;
  if (nvars == 0) return 0;
  std::uint64_t total = 0;
  for (int e = 0; e <= degree; ++e) total += monomial_count(nvars - 1, degree - e);
  return total;
}

}  // namespace oracle
