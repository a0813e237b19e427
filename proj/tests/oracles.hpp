#pragma once

// Brute-force helpers shared by the unit tests. None of them call the
// library code they are used to check.

#include "kpieri/permutation.hpp"

#include <deque>
#include <set>
#include <vector>

namespace oracle {

inline int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      count += w[i] > w[j];
  return count;
}

inline std::vector<int> padded(const kpieri::Permutation& w, int n) {
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i)
    out[i - 1] = i <= w.size() ? w.window()[i - 1] : i;
  return out;
}

/// Bruhat cover by length: swapping a<b raises the inversion count by one.
inline bool covers(const std::vector<int>& w, int a, int b) {
  std::vector<int> u = w;
  std::swap(u[a - 1], u[b - 1]);
  return inversions(u) == inversions(w) + 1;
}

/// Windows reachable from v (as length-n windows) by k-covers inside S_n.
inline std::set<std::vector<int>> k_reachable(const kpieri::Permutation& v, int k, int n) {
  std::set<std::vector<int>> seen{padded(v, n)};
  std::deque<std::vector<int>> queue{padded(v, n)};
  while (!queue.empty()) {
    std::vector<int> u = queue.front();
    queue.pop_front();
    for (int a = 1; a <= k; ++a)
      for (int b = k + 1; b <= n; ++b)
        if (covers(u, a, b)) {
          std::vector<int> next = u;
          std::swap(next[a - 1], next[b - 1]);
          if (seen.insert(next).second)
            queue.push_back(next);
        }
  }
  return seen;
}

} // namespace oracle
