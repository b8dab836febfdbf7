#pragma once

#include <cstdint>
#include <vector>

#include "msm/consistency.hpp"
#include "msm/costmodel.hpp"

namespace msm {

struct GroundTruth;  // synthgen.hpp

struct MatchOptions {
  int max_outer_iters = 10;
  std::uint64_t seed = 0;  // reference choice of the randomized matchers
  CostParams cost;
  // Optional instrumentation: when set, the per-sweep trace carries matching
  // accuracy next to the clustering error (Fig.-3-style curves).
  const GroundTruth* truth = nullptr;
};

struct IterationRecord {
  double accuracy;         // NaN when no ground truth was supplied
  double clustering_error;
  int changed_count;       // correspondences replaced during the sweep
};

// records[0] is the state right after initialization; one record per sweep
// follows, so the length is at most max_outer_iters + 1.
struct IterationTrace {
  std::vector<IterationRecord> records;
  std::uint64_t init_lap_calls = 0;   // two-set solves spent on initialization
  std::uint64_t total_lap_calls = 0;  // including the update sweeps
};

struct ClusterResult {
  StarConfiguration star;
  IterationTrace trace;
};

// One Hungarian solve per unordered pair of sets, O(N^2) solves in total.
// Pairs are independent and run in parallel; assembly order is fixed.
MatchConfiguration hung_pair(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);
MatchConfiguration hung_pair_serial(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);

// N-1 Hungarian solves against a seed-chosen reference, then star expansion;
// the result is cycle-consistent but reuses no cross-set information.
MatchConfiguration hung_lin(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);

// The star hung_lin expands, for callers that need the reference and the
// X_ri maps themselves.
StarConfiguration hung_lin_star(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);

// Constrained-clustering matcher with random reference and ascending update
// order. Sweeps the cluster update until nothing changes or the iteration
// budget is spent.
ClusterResult match_cluster_fast(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);

// Full variant: initializes from hung_pair, picks the reference with the
// highest unary consistency, and sweeps sets in descending pairwise
// consistency order (order frozen from the initial configuration).
ClusterResult match_cluster(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts);

// One cluster update: match aligned set k against the mean of the other
// aligned sets (reference included) and fold the resulting permutation into
// X_rk. Returns the replacement for star.maps[k].
Correspondence update_step(int k, const StarConfiguration& star,
                           const std::vector<FeatureMatrix>& aligned, const MatchOptions& opts);

MatchConfiguration star_to_config(const StarConfiguration& star);

// Mean of the aligned feature matrices, excluding set `exclude`. Column c is
// the running centroid of the cluster anchored at reference node c.
using ClusterCenters = FeatureMatrix;
ClusterCenters cluster_center(const std::vector<FeatureMatrix>& aligned, int exclude);

// sets[i] reordered into reference node order: row s of the result is the
// feature vector of the node of set i matched to reference node s.
FeatureMatrix align_to_reference(const FeatureMatrix& set, const Correspondence& x_ri);

}  // namespace msm
