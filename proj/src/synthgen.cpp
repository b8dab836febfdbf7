#include "msm/synthgen.hpp"

#include <stdexcept>

#include "msm/rng.hpp"

namespace msm {

void SyntheticSpec::validate() const {
  if (n_sets < 2) throw std::invalid_argument("SyntheticSpec: n_sets must be >= 2");
  if (n_inliers < 1) throw std::invalid_argument("SyntheticSpec: n_inliers must be >= 1");
  if (n_outliers < 0) throw std::invalid_argument("SyntheticSpec: n_outliers must be >= 0");
  if (dim < 1) throw std::invalid_argument("SyntheticSpec: dim must be >= 1");
  if (epsilon < 0.0) throw std::invalid_argument("SyntheticSpec: epsilon must be >= 0");
  for (const double e : epsilon_choices) {
    if (e < 0.0) throw std::invalid_argument("SyntheticSpec: epsilon choices must be >= 0");
  }
}

Dataset generate(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const int n = spec.n_inliers + spec.n_outliers;

  // Latent reference attributes, drawn node-major. Draw order is frozen:
  // reference first, then per set (epsilon choice, inlier noise, outliers,
  // shuffle), so every emitted value is pinned by the seed.
  std::vector<double> reference(static_cast<std::size_t>(spec.n_inliers) * spec.dim);
  for (double& x : reference) x = rng.uniform01();

  Dataset data;
  data.sets.reserve(spec.n_sets);
  GroundTruth truth;
  truth.labels.reserve(spec.n_sets);

  for (int s = 0; s < spec.n_sets; ++s) {
    double eps = spec.epsilon;
    if (!spec.epsilon_choices.empty()) {
      eps = spec.epsilon_choices[rng.bounded(static_cast<int>(spec.epsilon_choices.size()))];
    }

    FeatureMatrix unshuffled(spec.dim, n, s);
    for (int t = 0; t < spec.n_inliers; ++t) {
      for (int d = 0; d < spec.dim; ++d) {
        unshuffled.at(t, d) =
            reference[static_cast<std::size_t>(t) * spec.dim + d] + rng.normal(eps);
      }
    }
    for (int t = spec.n_inliers; t < n; ++t) {
      for (int d = 0; d < spec.dim; ++d) unshuffled.at(t, d) = rng.uniform01();
    }

    const std::vector<int> shuffle = rng.permutation(n);  // node -> pre-shuffle slot
    FeatureMatrix set(spec.dim, n, s);
    std::vector<int> labels(n);
    for (int t = 0; t < n; ++t) {
      const int src = shuffle[t];
      for (int d = 0; d < spec.dim; ++d) set.at(t, d) = unshuffled.at(src, d);
      labels[t] = src < spec.n_inliers ? src : GroundTruth::kOutlier;
    }
    data.sets.push_back(std::move(set));
    truth.labels.push_back(std::move(labels));
  }
  data.truth = std::move(truth);
  return data;
}

}  // namespace msm
