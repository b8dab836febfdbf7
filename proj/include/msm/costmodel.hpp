#pragma once

#include <span>
#include <vector>

#include "msm/assignment.hpp"

namespace msm {

// One feature set: D attributes per node. Node vectors are stored
// contiguously (node-major), so node(t) is the paper's column f_t.
// Nodes at index >= real_node_count() are padding dummies; they carry zero
// attributes and zero affinity to everything.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(int dim, int node_count, int set_id = 0);

  int dim() const { return dim_; }
  int node_count() const { return nodes_; }
  int set_id() const { return set_id_; }
  int real_node_count() const { return real_nodes_; }
  bool is_dummy(int t) const { return t >= real_nodes_; }

  double& at(int node, int d) { return data_[static_cast<std::size_t>(node) * dim_ + d]; }
  double at(int node, int d) const { return data_[static_cast<std::size_t>(node) * dim_ + d]; }
  std::span<double> node(int t) { return {data_.data() + static_cast<std::size_t>(t) * dim_, static_cast<std::size_t>(dim_)}; }
  std::span<const double> node(int t) const { return {data_.data() + static_cast<std::size_t>(t) * dim_, static_cast<std::size_t>(dim_)}; }

  void append_dummy_nodes(int count);

  // Throws std::invalid_argument on bad dimensions or non-finite entries.
  void validate() const;

  bool operator==(const FeatureMatrix&) const = default;

 private:
  int dim_ = 0;
  int nodes_ = 0;
  int real_nodes_ = 0;
  int set_id_ = 0;
  std::vector<double> data_;
};

struct CostParams {
  double sigma_sq = 0.15;
};

// Affinity matrix of the exponential distance model:
//   entry(s,t) = exp(-||a.node(s) - b.node(t)||_2 / (sigma_sq * D)),
// in (0,1] for real nodes and exactly 0 when either node is a dummy.
// Note the value is largest for identical features; matchers negate it
// before handing it to the minimizing solve_lap.
CostMatrix build_cost(const FeatureMatrix& a, const FeatureMatrix& b, const CostParams& params);

// Single-threaded reference; bit-identical to build_cost.
CostMatrix build_cost_serial(const FeatureMatrix& a, const FeatureMatrix& b, const CostParams& params);

}  // namespace msm
