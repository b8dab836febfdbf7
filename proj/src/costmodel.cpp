#include "msm/costmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace msm {

namespace {

void check_pair(const FeatureMatrix& a, const FeatureMatrix& b, const CostParams& params) {
  a.validate();
  b.validate();
  if (a.dim() != b.dim())
    throw std::invalid_argument("build_cost: attribute dimensions differ");
  if (!(params.sigma_sq > 0.0))
    throw std::invalid_argument("build_cost: sigma_sq must be positive");
}

inline double affinity(const FeatureMatrix& a, const FeatureMatrix& b, int s, int t,
                       double inv_scale) {
  if (a.is_dummy(s) || b.is_dummy(t)) return 0.0;
  const auto fs = a.node(s);
  const auto ft = b.node(t);
  double sq = 0.0;
  for (std::size_t d = 0; d < fs.size(); ++d) {
    const double diff = fs[d] - ft[d];
    sq += diff * diff;
  }
  return std::exp(-std::sqrt(sq) * inv_scale);
}

}  // namespace

FeatureMatrix::FeatureMatrix(int dim, int node_count, int set_id)
    : dim_(dim),
      nodes_(node_count),
      real_nodes_(node_count),
      set_id_(set_id),
      data_(static_cast<std::size_t>(dim) * node_count, 0.0) {
  if (dim < 1 || node_count < 1)
    throw std::invalid_argument("FeatureMatrix: dim and node count must be >= 1");
}

void FeatureMatrix::append_dummy_nodes(int count) {
  if (count < 0) throw std::invalid_argument("append_dummy_nodes: negative count");
  nodes_ += count;
  data_.resize(static_cast<std::size_t>(nodes_) * dim_, 0.0);
}

void FeatureMatrix::validate() const {
  if (dim_ < 1 || nodes_ < 1)
    throw std::invalid_argument("FeatureMatrix: dim and node count must be >= 1");
  for (const double x : data_) {
    if (!std::isfinite(x)) throw std::invalid_argument("FeatureMatrix: non-finite entry");
  }
}

CostMatrix build_cost(const FeatureMatrix& a, const FeatureMatrix& b, const CostParams& params) {
  check_pair(a, b, params);
  const double inv_scale = 1.0 / (params.sigma_sq * a.dim());
  CostMatrix out(a.node_count(), b.node_count());
#pragma omp parallel for schedule(static)
  for (int s = 0; s < a.node_count(); ++s) {
    for (int t = 0; t < b.node_count(); ++t) {
      out(s, t) = affinity(a, b, s, t, inv_scale);
    }
  }
  return out;
}

CostMatrix build_cost_serial(const FeatureMatrix& a, const FeatureMatrix& b,
                             const CostParams& params) {
  check_pair(a, b, params);
  const double inv_scale = 1.0 / (params.sigma_sq * a.dim());
  CostMatrix out(a.node_count(), b.node_count());
  for (int s = 0; s < a.node_count(); ++s) {
    for (int t = 0; t < b.node_count(); ++t) {
      out(s, t) = affinity(a, b, s, t, inv_scale);
    }
  }
  return out;
}

}  // namespace msm
