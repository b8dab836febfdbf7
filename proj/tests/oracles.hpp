// Test-only reference implementations, kept independent of the library code
// paths they check: consistency metrics evaluated with dense matrix
// arithmetic straight from their definitions, and exhaustive assignment
// enumeration for small problems.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "msm/consistency.hpp"
#include "msm/rng.hpp"

namespace oracles {

using Mat = std::vector<std::vector<double>>;

inline Mat to_dense(const msm::Correspondence& x) {
  const int n = x.size();
  Mat m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) m[i][x(i)] = 1.0;
  return m;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline double frobenius_of_difference(const Mat& a, const Mat& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double d = a[i][j] - b[i][j];
      sum += d * d;
    }
  return std::sqrt(sum);
}

// Def. 1 evaluated verbatim on dense matrices.
inline double naive_unary_consistency(int k, const msm::MatchConfiguration& config) {
  const int n_sets = config.set_count();
  const int n = config.node_count();
  double sum = 0.0;
  for (int i = 0; i < n_sets - 1; ++i) {
    for (int j = i + 1; j < n_sets; ++j) {
      const Mat x_ij = to_dense(config.pair(i, j));
      const Mat composed = multiply(to_dense(config.pair(i, k)), to_dense(config.pair(k, j)));
      sum += frobenius_of_difference(x_ij, composed) / 2.0;
    }
  }
  return 1.0 - sum / (static_cast<double>(n) * n_sets * (n_sets - 1) / 2.0);
}

// Def. 2 evaluated verbatim on dense matrices.
inline double naive_pairwise_consistency(int i, int j, const msm::MatchConfiguration& config) {
  const int n_sets = config.set_count();
  const int n = config.node_count();
  const Mat x_ij = to_dense(config.pair(i, j));
  double sum = 0.0;
  for (int k = 0; k < n_sets; ++k) {
    const Mat composed = multiply(to_dense(config.pair(i, k)), to_dense(config.pair(k, j)));
    sum += frobenius_of_difference(x_ij, composed) / 2.0;
  }
  return 1.0 - sum / (static_cast<double>(n) * n_sets);
}

// Minimum-total-cost injective map of every row to a distinct column,
// n_rows <= n_cols, by exhaustive enumeration.
inline double brute_force_injective_cost(const msm::CostMatrix& cost) {
  const int rows = cost.rows();
  const int cols = cost.cols();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(rows, -1);
  std::vector<char> used(cols, 0);
  const auto recurse = [&](auto&& self, int row, double total) -> void {
    if (row == rows) {
      best = std::min(best, total);
      return;
    }
    for (int c = 0; c < cols; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      self(self, row + 1, total + cost(row, c));
      used[c] = 0;
    }
  };
  recurse(recurse, 0, 0.0);
  return best;
}

inline msm::Correspondence random_correspondence(msm::Rng& rng, int n) {
  return msm::Correspondence(rng.permutation(n));
}

inline msm::MatchConfiguration random_configuration(msm::Rng& rng, int n_sets, int n) {
  msm::MatchConfiguration config(n_sets, n);
  for (int i = 0; i < n_sets - 1; ++i)
    for (int j = i + 1; j < n_sets; ++j) config.set_pair(i, j, random_correspondence(rng, n));
  return config;
}

inline msm::StarConfiguration random_star(msm::Rng& rng, int n_sets, int n) {
  msm::StarConfiguration star;
  star.reference = rng.bounded(n_sets);
  star.node_count = n;
  star.maps.assign(n_sets, msm::Correspondence::identity(n));
  for (int i = 0; i < n_sets; ++i) {
    if (i == star.reference) continue;
    star.maps[i] = random_correspondence(rng, n);
  }
  return star;
}

inline msm::CostMatrix random_cost(msm::Rng& rng, int rows, int cols) {
  msm::CostMatrix cost(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) cost(r, c) = rng.uniform01();
  return cost;
}

}  // namespace oracles
