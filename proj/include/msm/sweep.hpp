#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msm/io.hpp"

namespace msm {

// The four matching strategies, by their CLI names.
const std::vector<std::string>& all_method_names();
bool is_star_method(const std::string& name);

struct MethodOutput {
  std::optional<StarConfiguration> star;  // absent for hungPair
  MatchConfiguration config;
  std::optional<IterationTrace> trace;    // cluster matchers only
  double runtime_ms = 0.0;                // matcher call only
};

// Runs one named matcher. Throws std::invalid_argument for unknown names.
MethodOutput run_method(const std::string& name, const std::vector<FeatureMatrix>& sets,
                        const MatchOptions& opts);

// Fills the metric fields of a TrialReport from a method output. accuracy
// stays NaN without ground truth; clustering_error is NaN without a star.
TrialReport make_report(const std::string& method, const MethodOutput& output,
                        const std::vector<FeatureMatrix>& sets, const GroundTruth* truth,
                        const std::string& accuracy_mode);

struct SweepSpec {
  std::string axis = "epsilon";  // epsilon | outliers | sets
  std::vector<double> values;
  int n_sets = 30;
  int n_inliers = 20;
  int n_outliers = 0;
  double epsilon = 0.0;
  std::vector<double> epsilon_choices;
  int dim = 5;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::vector<std::string> methods;
  double sigma_sq = 0.15;
  int max_outer_iters = 10;
  std::string accuracy_mode = "pairwise";

  void validate() const;  // throws std::invalid_argument on unusable specs
};

// One report per (method, axis value, trial), emitted in that order. Trial
// seeds are base_seed + trial index; all methods at one grid point share the
// same generated dataset. Jobs run in parallel under the MSM_THREADS cap;
// every field except runtime_ms is deterministic.
std::vector<TrialReport> run_sweep(const SweepSpec& spec);

std::string sweep_to_csv(const std::vector<TrialReport>& reports);

}  // namespace msm
