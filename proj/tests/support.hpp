#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "aspec/graph.hpp"

namespace testing {

// Sign and log|det| of (lambda I - M) by Gaussian elimination with partial pivoting.
inline std::pair<int, double> shifted_log_det(const aspec::DenseSymMatrix& m, double lambda) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? lambda : 0.0) - m(i, j);
  int sign = 1;
  double log_abs = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    if (a[p * n + c] == 0.0) return {0, -INFINITY};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      sign = -sign;
    }
    const double piv = a[c * n + c];
    if (piv < 0) sign = -sign;
    log_abs += std::log(std::abs(piv));
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / piv;
      for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return {sign, log_abs};
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? d : INFINITY;
}

inline aspec::Graph random_tree(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  return aspec::tree_from_pruefer(seq);
}

inline std::vector<int> sorted_degrees(const aspec::Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace testing
