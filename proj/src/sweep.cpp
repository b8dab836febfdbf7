#include "msm/sweep.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "msm/parallel.hpp"

namespace msm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

const std::vector<std::string>& all_method_names() {
  static const std::vector<std::string> names = {"hungPair", "hungLin", "matchCluster",
                                                 "matchClusterFast"};
  return names;
}

bool is_star_method(const std::string& name) { return name != "hungPair"; }

MethodOutput run_method(const std::string& name, const std::vector<FeatureMatrix>& sets,
                        const MatchOptions& opts) {
  MethodOutput out;
  const auto start = std::chrono::steady_clock::now();
  // The timer covers the matcher itself; star expansion of the cluster
  // methods is evaluation-side work and stays outside.
  if (name == "hungPair") {
    out.config = hung_pair(sets, opts);
    out.runtime_ms = elapsed_ms(start);
  } else if (name == "hungLin") {
    // Its contract is a full configuration, so the expansion is timed too.
    StarConfiguration star = hung_lin_star(sets, opts);
    out.config = star_to_config(star);
    out.runtime_ms = elapsed_ms(start);
    out.star = std::move(star);
  } else if (name == "matchCluster" || name == "matchClusterFast") {
    ClusterResult r = name == "matchCluster" ? match_cluster(sets, opts)
                                             : match_cluster_fast(sets, opts);
    out.runtime_ms = elapsed_ms(start);
    out.star = std::move(r.star);
    out.trace = std::move(r.trace);
    out.config = star_to_config(*out.star);
  } else {
    throw std::invalid_argument("unknown method '" + name + "'");
  }
  return out;
}

TrialReport make_report(const std::string& method, const MethodOutput& output,
                        const std::vector<FeatureMatrix>& sets, const GroundTruth* truth,
                        const std::string& accuracy_mode) {
  TrialReport report;
  report.method = method;
  report.runtime_ms = output.runtime_ms;

  report.accuracy = kNaN;
  if (truth != nullptr) {
    if (accuracy_mode == "star") {
      if (!output.star)
        throw std::invalid_argument("accuracy mode 'star' needs a star-producing method");
      report.accuracy = accuracy_star(*output.star, *truth);
    } else if (accuracy_mode == "pairwise") {
      report.accuracy = accuracy(output.config, *truth);
    } else {
      throw std::invalid_argument("unknown accuracy mode '" + accuracy_mode + "'");
    }
  }

  const ConsistencyReport consistency = analyze_consistency(output.config);
  double mean_cu = 0.0;
  for (const double cu : consistency.unary) mean_cu += cu;
  report.mean_unary_consistency = mean_cu / consistency.unary.size();

  report.clustering_error = output.star ? clustering_error(*output.star, sets) : kNaN;
  return report;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep: no axis values");
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (methods.empty()) throw std::invalid_argument("sweep: no methods");
  if (axis != "epsilon" && axis != "outliers" && axis != "sets")
    throw std::invalid_argument("sweep: axis must be epsilon, outliers or sets");
  if (axis == "epsilon" && !epsilon_choices.empty())
    throw std::invalid_argument("sweep: epsilon axis conflicts with an epsilon mix");
  if (axis != "epsilon") {
    for (const double v : values) {
      if (v < 0 || v != std::floor(v))
        throw std::invalid_argument("sweep: " + axis + " values must be non-negative integers");
    }
  }
  for (const auto& m : methods) {
    bool known = false;
    for (const auto& name : all_method_names()) known = known || name == m;
    if (!known) throw std::invalid_argument("unknown method '" + m + "'");
    if (accuracy_mode == "star" && !is_star_method(m))
      throw std::invalid_argument("accuracy mode 'star' is undefined for " + m);
  }
  if (accuracy_mode != "pairwise" && accuracy_mode != "star")
    throw std::invalid_argument("unknown accuracy mode '" + accuracy_mode + "'");
}

std::vector<TrialReport> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const int n_values = static_cast<int>(spec.values.size());
  const int n_methods = static_cast<int>(spec.methods.size());
  const int jobs = n_values * spec.trials;

  std::vector<TrialReport> reports(static_cast<std::size_t>(jobs) * n_methods);

  // One job per (axis value, trial): generate the dataset once and run every
  // method on it. Slots are pre-assigned, so completion order cannot change
  // the output.
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
  for (int job = 0; job < jobs; ++job) {
    const int value_idx = job / spec.trials;
    const int trial = job % spec.trials;

    SyntheticSpec synth;
    synth.n_sets = spec.n_sets;
    synth.n_inliers = spec.n_inliers;
    synth.n_outliers = spec.n_outliers;
    synth.dim = spec.dim;
    synth.epsilon = spec.epsilon;
    synth.epsilon_choices = spec.epsilon_choices;
    synth.seed = spec.base_seed + static_cast<std::uint64_t>(trial);

    const double value = spec.values[value_idx];
    if (spec.axis == "epsilon")
      synth.epsilon = value;
    else if (spec.axis == "outliers")
      synth.n_outliers = static_cast<int>(value);
    else
      synth.n_sets = static_cast<int>(value);

    const Dataset data = generate(synth);

    MatchOptions opts;
    opts.max_outer_iters = spec.max_outer_iters;
    opts.cost.sigma_sq = spec.sigma_sq;
    opts.seed = synth.seed;

    for (int m = 0; m < n_methods; ++m) {
      const MethodOutput output = run_method(spec.methods[m], data.sets, opts);
      TrialReport report = make_report(spec.methods[m], output, data.sets,
                                       data.truth ? &*data.truth : nullptr, spec.accuracy_mode);
      report.n_sets = synth.n_sets;
      report.n_inliers = synth.n_inliers;
      report.n_outliers = synth.n_outliers;
      report.epsilon = synth.epsilon;
      report.seed = synth.seed;
      // method-major layout: method block, then axis value, then trial
      reports[(static_cast<std::size_t>(m) * n_values + value_idx) * spec.trials + trial] =
          std::move(report);
    }
  }
  return reports;
}

std::string sweep_to_csv(const std::vector<TrialReport>& reports) {
  std::ostringstream out;
  out << csv_header() << "\n";
  for (const auto& r : reports) out << csv_row(r) << "\n";
  return out.str();
}

}  // namespace msm
