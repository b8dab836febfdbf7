#include "msm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "msm/matchers.hpp"

namespace msm {

namespace {

// label -> node position for one set; sentinel labels are skipped.
std::vector<int> label_positions(const std::vector<int>& labels, int n_entities) {
  std::vector<int> pos(n_entities, -1);
  for (int t = 0; t < static_cast<int>(labels.size()); ++t) {
    const int e = labels[t];
    if (e == GroundTruth::kOutlier) continue;
    if (e < 0 || e >= n_entities || pos[e] != -1)
      throw std::invalid_argument("accuracy: malformed ground-truth labels");
    pos[e] = t;
  }
  return pos;
}

int max_entity(const GroundTruth& truth) {
  int top = -1;
  for (const auto& labels : truth.labels)
    for (const int e : labels) top = std::max(top, e);
  return top + 1;
}

}  // namespace

double accuracy(const MatchConfiguration& config, const GroundTruth& truth) {
  const int n_sets = config.set_count();
  if (static_cast<int>(truth.labels.size()) != n_sets)
    throw std::invalid_argument("accuracy: ground truth covers a different set count");
  for (const auto& labels : truth.labels) {
    if (static_cast<int>(labels.size()) != config.node_count())
      throw std::invalid_argument("accuracy: ground truth covers a different node count");
  }

  const int n_entities = max_entity(truth);
  std::vector<std::vector<int>> positions;
  positions.reserve(n_sets);
  for (const auto& labels : truth.labels) positions.push_back(label_positions(labels, n_entities));

  std::int64_t correct = 0, total = 0;
  for (int i = 0; i < n_sets - 1; ++i) {
    for (int j = i + 1; j < n_sets; ++j) {
      const Correspondence x_ij = config.pair(i, j);
      for (int e = 0; e < n_entities; ++e) {
        const int a = positions[i][e];
        const int b = positions[j][e];
        if (a < 0 || b < 0) continue;
        ++total;
        if (x_ij(a) == b) ++correct;
      }
    }
  }
  if (total == 0) throw std::invalid_argument("accuracy: no entity is an inlier in two sets");
  return static_cast<double>(correct) / static_cast<double>(total);
}

double accuracy_star(const StarConfiguration& star, const GroundTruth& truth) {
  star.validate();
  const int n_sets = static_cast<int>(star.maps.size());
  if (static_cast<int>(truth.labels.size()) != n_sets)
    throw std::invalid_argument("accuracy_star: ground truth covers a different set count");

  const int n_entities = max_entity(truth);
  const std::vector<int> ref_pos = label_positions(truth.labels[star.reference], n_entities);

  std::int64_t correct = 0, total = 0;
  for (int i = 0; i < n_sets; ++i) {
    if (i == star.reference) continue;
    const std::vector<int> pos = label_positions(truth.labels[i], n_entities);
    for (int e = 0; e < n_entities; ++e) {
      const int a = ref_pos[e];
      const int b = pos[e];
      if (a < 0 || b < 0) continue;
      ++total;
      if (star.maps[i](a) == b) ++correct;
    }
  }
  if (total == 0) throw std::invalid_argument("accuracy_star: no entity is an inlier in two sets");
  return static_cast<double>(correct) / static_cast<double>(total);
}

double clustering_error(const StarConfiguration& star, const std::vector<FeatureMatrix>& sets) {
  star.validate();
  const int n_sets = static_cast<int>(sets.size());
  if (static_cast<int>(star.maps.size()) != n_sets)
    throw std::invalid_argument("clustering_error: star covers a different set count");
  const int n = star.node_count;
  const int dim = sets[0].dim();
  for (const auto& s : sets) {
    if (s.node_count() != n || s.dim() != dim)
      throw std::invalid_argument("clustering_error: set dimensions disagree with the star");
  }

  std::vector<FeatureMatrix> aligned;
  aligned.reserve(n_sets);
  for (int i = 0; i < n_sets; ++i) aligned.push_back(align_to_reference(sets[i], star.maps[i]));

  FeatureMatrix mean(dim, n);
  for (int i = 0; i < n_sets; ++i)
    for (int c = 0; c < n; ++c) {
      const auto src = aligned[i].node(c);
      auto dst = mean.node(c);
      for (int d = 0; d < dim; ++d) dst[d] += src[d];
    }
  const double inv = 1.0 / n_sets;
  for (int c = 0; c < n; ++c)
    for (double& x : mean.node(c)) x *= inv;

  double sum = 0.0;
  for (int i = 0; i < n_sets; ++i) {
    for (int c = 0; c < n; ++c) {
      const auto f = aligned[i].node(c);
      const auto m = mean.node(c);
      double sq = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double diff = f[d] - m[d];
        sq += diff * diff;
      }
      sum += sq;
    }
  }
  return sum / (static_cast<double>(n_sets) * n);
}

std::vector<MethodSummary> summarize(const std::vector<TrialReport>& trials) {
  if (trials.empty()) throw std::invalid_argument("summarize: no trials");

  std::vector<MethodSummary> out;
  for (const auto& t : trials) {
    MethodSummary* slot = nullptr;
    for (auto& s : out)
      if (s.method == t.method) slot = &s;
    if (slot == nullptr) {
      out.push_back(MethodSummary{t.method, 0, 0.0, 0.0, 0.0, 0.0});
      slot = &out.back();
    }
    ++slot->trials;
    slot->accuracy_mean += t.accuracy;
    slot->runtime_mean_ms += t.runtime_ms;
  }
  for (auto& s : out) {
    s.accuracy_mean /= s.trials;
    s.runtime_mean_ms /= s.trials;
  }
  for (const auto& t : trials) {
    for (auto& s : out) {
      if (s.method != t.method) continue;
      const double da = t.accuracy - s.accuracy_mean;
      const double dr = t.runtime_ms - s.runtime_mean_ms;
      s.accuracy_std += da * da;
      s.runtime_std_ms += dr * dr;
    }
  }
  for (auto& s : out) {
    if (s.trials > 1) {
      s.accuracy_std = std::sqrt(s.accuracy_std / (s.trials - 1));
      s.runtime_std_ms = std::sqrt(s.runtime_std_ms / (s.trials - 1));
    } else {
      s.accuracy_std = 0.0;
      s.runtime_std_ms = 0.0;
    }
  }
  return out;
}

}  // namespace msm
