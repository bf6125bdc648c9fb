#pragma once

// Brute-force reference computations, independent of the library code they check.

#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "noether/group.hpp"
#include "noether/int_matrix.hpp"

namespace oracle {

inline noether::IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  noether::IntMatrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = d(rng);
  return M;
}

/// Cofactor expansion.
inline long long determinant(const noether::IntMatrix& M) {
  const auto n = M.rows();
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  long long s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    noether::IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = M(r, c);
    s += ((j % 2) ? -1 : 1) * M(0, j) * determinant(minor);
  }
  return s;
}

inline void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors.
inline long long minor_gcd(const noether::IntMatrix& M, int k) {
  std::vector<std::vector<int>> rows, cols;
  std::vector<int> cur;
  combinations(static_cast<int>(M.rows()), k, 0, cur, rows);
  combinations(static_cast<int>(M.cols()), k, 0, cur, cols);
  long long g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      noether::IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = M(r[i], c[j]);
      g = std::gcd(g, std::llabs(determinant(sub)));
    }
  return g;
}

/// Order by repeated multiplication.
inline int element_order(const noether::Group& g, std::uint32_t a) {
  std::uint32_t x = a;
  int k = 1;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace oracle
