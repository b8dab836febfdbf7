#pragma once

#include <vector>

#include "msm/assignment.hpp"

namespace msm {

// The full pairwise matching configuration over N sets with a common node
// count n. Only the upper triangle is stored; pair(j,i) is the inverse of
// pair(i,j) and pair(i,i) is the identity.
class MatchConfiguration {
 public:
  MatchConfiguration() = default;
  MatchConfiguration(int set_count, int node_count);  // identity everywhere

  int set_count() const { return n_sets_; }
  int node_count() const { return n_nodes_; }

  void set_pair(int i, int j, const Correspondence& x_ij);
  Correspondence pair(int i, int j) const;

  bool operator==(const MatchConfiguration&) const = default;

 private:
  int index_of(int i, int j) const;  // requires i < j
  int n_sets_ = 0;
  int n_nodes_ = 0;
  std::vector<Correspondence> upper_;
};

// Correspondences of every set to one reference set r; maps[r] is the
// identity. maps[i](s) is the node of set i matched to node s of set r, so
// reordering set i by maps[i] puts it in reference node order.
struct StarConfiguration {
  int reference = 0;
  int node_count = 0;
  std::vector<Correspondence> maps;

  void validate() const;
};

// Unary consistency of set k:
//   C_u(k) = 1 - sum_{i<j} ||X_ij - X_ik X_kj||_F / 2 / (n N (N-1) / 2).
// For permutation matrices each Frobenius term equals sqrt(2 m) with m the
// number of disagreeing rows, which the implementation uses verbatim.
double unary_consistency(int k, const MatchConfiguration& config);

// Pairwise consistency of X_ij:
//   C_p(X_ij) = 1 - sum_k ||X_ij - X_ik X_kj||_F / 2 / (n N).
double pairwise_consistency(int i, int j, const MatchConfiguration& config);

struct ConsistencyReport {
  std::vector<double> unary;            // C_u per set
  int reference = 0;                    // argmax C_u, smallest index on ties
  std::vector<double> pairwise_to_ref;  // C_p(X_ri) per i; entry [r] is 1
};

ConsistencyReport analyze_consistency(const MatchConfiguration& config);
ConsistencyReport analyze_consistency_serial(const MatchConfiguration& config);

// Composes every pair through the reference: X_ij = X_ir^T X_rj. The result
// is cycle-consistent by construction (C_u identically 1).
MatchConfiguration expand_star(const StarConfiguration& star);

}  // namespace msm
