#include "msm/matchers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "msm/metrics.hpp"
#include "msm/rng.hpp"
#include "msm/synthgen.hpp"

namespace msm {

namespace {

void check_sets(const std::vector<FeatureMatrix>& sets, int minimum, const char* who) {
  if (static_cast<int>(sets.size()) < minimum)
    throw std::invalid_argument(std::string(who) + ": needs at least " +
                                std::to_string(minimum) + " feature sets");
  const int dim = sets[0].dim();
  const int n = sets[0].node_count();
  for (const auto& s : sets) {
    s.validate();
    if (s.dim() != dim) throw std::invalid_argument(std::string(who) + ": mixed attribute dimensions");
    if (s.node_count() != n)
      throw std::invalid_argument(std::string(who) + ": ragged node counts; pad the dataset first");
  }
}

// Maximize total affinity = minimize its negation.
LapResult solve_affinity(const CostMatrix& affinity) { return solve_lap(affinity.negated()); }

Correspondence pairwise_match(const FeatureMatrix& a, const FeatureMatrix& b,
                              const CostParams& params) {
  return solve_affinity(build_cost(a, b, params)).assignment;
}

int pick_reference(std::uint64_t seed, int n_sets) {
  Rng rng(seed);
  return rng.bounded(n_sets);
}

double traced_accuracy(const StarConfiguration& star, const GroundTruth* truth) {
  if (truth == nullptr) return std::numeric_limits<double>::quiet_NaN();
  return accuracy(star_to_config(star), *truth);
}

// Shared outer loop of Alg. 1/2: repeat the update sweep in the given order,
// re-aligning a set immediately after its correspondence changes, until a
// full sweep changes nothing or the budget runs out.
void run_sweeps(const std::vector<FeatureMatrix>& sets, StarConfiguration& star,
                std::vector<FeatureMatrix>& aligned, const std::vector<int>& order,
                const MatchOptions& opts, IterationTrace& trace) {
  trace.records.push_back(
      {traced_accuracy(star, opts.truth), clustering_error(star, sets), 0});
  for (int iter = 0; iter < opts.max_outer_iters; ++iter) {
    int changed = 0;
    for (const int k : order) {
      Correspondence updated = update_step(k, star, aligned, opts);
      if (!(updated == star.maps[k])) {
        star.maps[k] = std::move(updated);
        aligned[k] = align_to_reference(sets[k], star.maps[k]);
        ++changed;
      }
    }
    trace.records.push_back(
        {traced_accuracy(star, opts.truth), clustering_error(star, sets), changed});
    if (changed == 0) break;
  }
}

std::vector<FeatureMatrix> align_all(const std::vector<FeatureMatrix>& sets,
                                     const StarConfiguration& star) {
  std::vector<FeatureMatrix> aligned;
  aligned.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    aligned.push_back(align_to_reference(sets[i], star.maps[i]));
  return aligned;
}

// Star against a seed-chosen reference from N-1 independent pairwise solves.
StarConfiguration init_random_star(const std::vector<FeatureMatrix>& sets,
                                   const MatchOptions& opts) {
  const int n_sets = static_cast<int>(sets.size());
  const int n = sets[0].node_count();
  StarConfiguration star;
  star.reference = pick_reference(opts.seed, n_sets);
  star.node_count = n;
  star.maps.assign(n_sets, Correspondence::identity(n));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_sets; ++i) {
    if (i == star.reference) continue;
    star.maps[i] = pairwise_match(sets[star.reference], sets[i], opts.cost);
  }
  return star;
}

}  // namespace

FeatureMatrix align_to_reference(const FeatureMatrix& set, const Correspondence& x_ri) {
  if (x_ri.size() != set.node_count())
    throw std::invalid_argument("align_to_reference: permutation size mismatch");
  FeatureMatrix out(set.dim(), set.node_count(), set.set_id());
  for (int s = 0; s < set.node_count(); ++s) {
    const auto src = set.node(x_ri(s));
    std::copy(src.begin(), src.end(), out.node(s).begin());
  }
  return out;
}

ClusterCenters cluster_center(const std::vector<FeatureMatrix>& aligned, int exclude) {
  const int n_sets = static_cast<int>(aligned.size());
  if (n_sets < 2) throw std::invalid_argument("cluster_center: needs at least 2 sets");
  const int dim = aligned[0].dim();
  const int n = aligned[0].node_count();
  ClusterCenters center(dim, n);
  for (int i = 0; i < n_sets; ++i) {
    if (i == exclude) continue;
    for (int s = 0; s < n; ++s) {
      const auto src = aligned[i].node(s);
      auto dst = center.node(s);
      for (int d = 0; d < dim; ++d) dst[d] += src[d];
    }
  }
  const double inv = 1.0 / (n_sets - 1);
  for (int s = 0; s < n; ++s)
    for (double& x : center.node(s)) x *= inv;
  return center;
}

Correspondence update_step(int k, const StarConfiguration& star,
                           const std::vector<FeatureMatrix>& aligned, const MatchOptions& opts) {
  if (k == star.reference)
    throw std::invalid_argument("update_step: the reference set is never updated");
  if (k < 0 || k >= static_cast<int>(aligned.size()))
    throw std::out_of_range("update_step: set index out of range");

  const ClusterCenters center = cluster_center(aligned, k);
  // q(s) = column of the aligned set matched to cluster s; folding q into the
  // old map keeps F_k reordered by star.maps[k] in reference node order.
  const Correspondence q = solve_affinity(build_cost(center, aligned[k], opts.cost)).assignment;
  return compose(q, star.maps[k]);
}

MatchConfiguration hung_pair(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts) {
  check_sets(sets, 2, "hung_pair");
  const int n_sets = static_cast<int>(sets.size());
  MatchConfiguration config(n_sets, sets[0].node_count());

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n_sets) * (n_sets - 1) / 2);
  for (int i = 0; i < n_sets - 1; ++i)
    for (int j = i + 1; j < n_sets; ++j) pairs.emplace_back(i, j);

  std::vector<Correspondence> results(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    results[p] = pairwise_match(sets[pairs[p].first], sets[pairs[p].second], opts.cost);
  }
  for (std::size_t p = 0; p < pairs.size(); ++p)
    config.set_pair(pairs[p].first, pairs[p].second, results[p]);
  return config;
}

MatchConfiguration hung_pair_serial(const std::vector<FeatureMatrix>& sets,
                                    const MatchOptions& opts) {
  check_sets(sets, 2, "hung_pair");
  const int n_sets = static_cast<int>(sets.size());
  MatchConfiguration config(n_sets, sets[0].node_count());
  for (int i = 0; i < n_sets - 1; ++i)
    for (int j = i + 1; j < n_sets; ++j)
      config.set_pair(i, j, pairwise_match(sets[i], sets[j], opts.cost));
  return config;
}

MatchConfiguration hung_lin(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts) {
  return star_to_config(hung_lin_star(sets, opts));
}

StarConfiguration hung_lin_star(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts) {
  check_sets(sets, 2, "hung_lin");
  return init_random_star(sets, opts);
}

ClusterResult match_cluster_fast(const std::vector<FeatureMatrix>& sets,
                                 const MatchOptions& opts) {
  check_sets(sets, 3, "match_cluster_fast");
  if (opts.max_outer_iters < 1)
    throw std::invalid_argument("match_cluster_fast: max_outer_iters must be >= 1");

  ClusterResult result;
  const std::uint64_t calls_before = lap_call_count();
  result.star = init_random_star(sets, opts);
  result.trace.init_lap_calls = lap_call_count() - calls_before;

  std::vector<FeatureMatrix> aligned = align_all(sets, result.star);
  std::vector<int> order;
  for (int k = 0; k < static_cast<int>(sets.size()); ++k)
    if (k != result.star.reference) order.push_back(k);

  run_sweeps(sets, result.star, aligned, order, opts, result.trace);
  result.trace.total_lap_calls = lap_call_count() - calls_before;
  return result;
}

ClusterResult match_cluster(const std::vector<FeatureMatrix>& sets, const MatchOptions& opts) {
  check_sets(sets, 3, "match_cluster");
  if (opts.max_outer_iters < 1)
    throw std::invalid_argument("match_cluster: max_outer_iters must be >= 1");

  ClusterResult result;
  const std::uint64_t calls_before = lap_call_count();
  const MatchConfiguration config = hung_pair(sets, opts);
  result.trace.init_lap_calls = lap_call_count() - calls_before;

  // Reference and update order come from the initial configuration only; the
  // consistency values are never refreshed between sweeps.
  const ConsistencyReport report = analyze_consistency(config);
  const int n_sets = static_cast<int>(sets.size());
  const int r = report.reference;

  result.star.reference = r;
  result.star.node_count = sets[0].node_count();
  result.star.maps.assign(n_sets, Correspondence::identity(result.star.node_count));
  for (int i = 0; i < n_sets; ++i)
    if (i != r) result.star.maps[i] = config.pair(r, i);

  std::vector<int> order;
  for (int k = 0; k < n_sets; ++k)
    if (k != r) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return report.pairwise_to_ref[a] > report.pairwise_to_ref[b];
  });

  std::vector<FeatureMatrix> aligned = align_all(sets, result.star);
  run_sweeps(sets, result.star, aligned, order, opts, result.trace);
  result.trace.total_lap_calls = lap_call_count() - calls_before;
  return result;
}

MatchConfiguration star_to_config(const StarConfiguration& star) { return expand_star(star); }

}  // namespace msm
