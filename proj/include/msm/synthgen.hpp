#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msm/costmodel.hpp"

namespace msm {

// Per-node entity labels: inliers carry ids 0..n_inliers-1 (each exactly once
// per set); outliers and padding dummies carry the sentinel -1.
struct GroundTruth {
  static constexpr int kOutlier = -1;
  std::vector<std::vector<int>> labels;  // [set][node]

  bool operator==(const GroundTruth&) const = default;
};

struct Dataset {
  std::vector<FeatureMatrix> sets;
  std::optional<GroundTruth> truth;
  std::string provenance;  // free-form metadata, round-tripped through MSMF

  bool operator==(const Dataset&) const = default;
};

struct SyntheticSpec {
  int n_sets = 2;
  int n_inliers = 1;
  int n_outliers = 0;
  int dim = 5;
  double epsilon = 0.0;
  // When non-empty, each perturbed set draws its own epsilon from this list
  // (heterogeneous noise levels around one shared latent reference).
  std::vector<double> epsilon_choices;
  std::uint64_t seed = 0;

  void validate() const;
};

// Draws one latent reference set of n_inliers nodes with Uniform[0,1]
// attributes, then emits n_sets perturbed copies: reference + N(0, eps) per
// entry, plus n_outliers fresh Uniform[0,1] nodes, with the node order of
// every set shuffled. The latent reference itself is never emitted. Fully
// determined by the seed.
Dataset generate(const SyntheticSpec& spec);

}  // namespace msm
