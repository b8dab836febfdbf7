#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msm/consistency.hpp"
#include "msm/synthgen.hpp"

namespace msm {

struct TrialReport {
  std::string method;
  int n_sets = 0;
  int n_inliers = 0;
  int n_outliers = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
  double runtime_ms = 0.0;
  double mean_unary_consistency = 0.0;
  double clustering_error = 0.0;
};

// Pooled inlier-recovery rate: over all unordered set pairs and all entities
// inlier in both sets, the fraction mapped label-to-label by X_ij. Outliers
// and dummies never enter numerator or denominator.
double accuracy(const MatchConfiguration& config, const GroundTruth& truth);

// Reference-relative variant: pools only the pairs (r, i).
double accuracy_star(const StarConfiguration& star, const GroundTruth& truth);

// Mean within-cluster squared deviation of the aligned features:
//   (1/(N n)) sum_i sum_c ||F'_i.col(c) - mean.col(c)||_2^2.
double clustering_error(const StarConfiguration& star, const std::vector<FeatureMatrix>& sets);

struct MethodSummary {
  std::string method;
  int trials = 0;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
  double runtime_mean_ms = 0.0;
  double runtime_std_ms = 0.0;
};

// Mean and sample standard deviation per method, first-appearance order.
std::vector<MethodSummary> summarize(const std::vector<TrialReport>& trials);

}  // namespace msm
