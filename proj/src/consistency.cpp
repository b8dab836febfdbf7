#include "msm/consistency.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msm {

namespace {

// ||X_ij - X_ik X_kj||_F / 2 as sqrt(2 m)/2 with m the mismatch count.
// Working on permutation vectors keeps the value exact for exact inputs.
double triple_term(const std::vector<int>& p_ij, const std::vector<int>& p_ik,
                   const std::vector<int>& p_kj) {
  int mismatches = 0;
  const int n = static_cast<int>(p_ij.size());
  for (int s = 0; s < n; ++s) {
    if (p_ij[s] != p_kj[p_ik[s]]) ++mismatches;
  }
  return std::sqrt(2.0 * mismatches) / 2.0;
}

void check_set_index(int k, const MatchConfiguration& config, const char* who) {
  if (k < 0 || k >= config.set_count()) throw std::out_of_range(std::string(who) + ": set index out of range");
}

}  // namespace

MatchConfiguration::MatchConfiguration(int set_count, int node_count)
    : n_sets_(set_count), n_nodes_(node_count) {
  if (set_count < 2) throw std::invalid_argument("MatchConfiguration: need at least 2 sets");
  if (node_count < 1) throw std::invalid_argument("MatchConfiguration: need at least 1 node");
  upper_.assign(static_cast<std::size_t>(set_count) * (set_count - 1) / 2,
                Correspondence::identity(node_count));
}

int MatchConfiguration::index_of(int i, int j) const {
  // upper triangle packed row by row: (0,1), (0,2), ..., (1,2), ...
  return i * n_sets_ - i * (i + 1) / 2 + (j - i - 1);
}

void MatchConfiguration::set_pair(int i, int j, const Correspondence& x_ij) {
  if (i < 0 || j < 0 || i >= n_sets_ || j >= n_sets_ || i == j)
    throw std::out_of_range("MatchConfiguration::set_pair: bad pair index");
  if (x_ij.size() != n_nodes_)
    throw std::invalid_argument("MatchConfiguration::set_pair: wrong permutation size");
  if (i < j)
    upper_[index_of(i, j)] = x_ij;
  else
    upper_[index_of(j, i)] = x_ij.inverse();
}

Correspondence MatchConfiguration::pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_sets_ || j >= n_sets_)
    throw std::out_of_range("MatchConfiguration::pair: bad pair index");
  if (i == j) return Correspondence::identity(n_nodes_);
  if (i < j) return upper_[index_of(i, j)];
  return upper_[index_of(j, i)].inverse();
}

void StarConfiguration::validate() const {
  const int n_sets = static_cast<int>(maps.size());
  if (n_sets < 2) throw std::invalid_argument("StarConfiguration: need at least 2 sets");
  if (reference < 0 || reference >= n_sets)
    throw std::invalid_argument("StarConfiguration: reference out of range");
  for (const auto& m : maps) {
    if (m.size() != node_count)
      throw std::invalid_argument("StarConfiguration: map size mismatch");
  }
  if (!(maps[reference] == Correspondence::identity(node_count)))
    throw std::invalid_argument("StarConfiguration: reference map must be identity");
}

double unary_consistency(int k, const MatchConfiguration& config) {
  check_set_index(k, config, "unary_consistency");
  const int n_sets = config.set_count();
  const int n = config.node_count();
  double sum = 0.0;
  for (int i = 0; i < n_sets - 1; ++i) {
    const auto p_ik = config.pair(i, k);
    for (int j = i + 1; j < n_sets; ++j) {
      sum += triple_term(config.pair(i, j).mapping(), p_ik.mapping(),
                         config.pair(k, j).mapping());
    }
  }
  const double denom = static_cast<double>(n) * n_sets * (n_sets - 1) / 2.0;
  return 1.0 - sum / denom;
}

double pairwise_consistency(int i, int j, const MatchConfiguration& config) {
  check_set_index(i, config, "pairwise_consistency");
  check_set_index(j, config, "pairwise_consistency");
  if (i == j) throw std::invalid_argument("pairwise_consistency: indices must differ");
  const int n_sets = config.set_count();
  const int n = config.node_count();
  const auto p_ij = config.pair(i, j);
  double sum = 0.0;
  for (int k = 0; k < n_sets; ++k) {
    sum += triple_term(p_ij.mapping(), config.pair(i, k).mapping(),
                       config.pair(k, j).mapping());
  }
  return 1.0 - sum / (static_cast<double>(n) * n_sets);
}

namespace {

ConsistencyReport finish_report(const MatchConfiguration& config, ConsistencyReport report) {
  const int n_sets = config.set_count();
  report.reference = 0;
  for (int k = 1; k < n_sets; ++k) {
    if (report.unary[k] > report.unary[report.reference]) report.reference = k;
  }
  report.pairwise_to_ref.assign(n_sets, 1.0);
  for (int i = 0; i < n_sets; ++i) {
    if (i == report.reference) continue;
    report.pairwise_to_ref[i] = pairwise_consistency(report.reference, i, config);
  }
  return report;
}

}  // namespace

ConsistencyReport analyze_consistency(const MatchConfiguration& config) {
  const int n_sets = config.set_count();
  ConsistencyReport report;
  report.unary.assign(n_sets, 0.0);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n_sets; ++k) {
    report.unary[k] = unary_consistency(k, config);
  }
  return finish_report(config, std::move(report));
}

ConsistencyReport analyze_consistency_serial(const MatchConfiguration& config) {
  const int n_sets = config.set_count();
  ConsistencyReport report;
  report.unary.assign(n_sets, 0.0);
  for (int k = 0; k < n_sets; ++k) {
    report.unary[k] = unary_consistency(k, config);
  }
  return finish_report(config, std::move(report));
}

MatchConfiguration expand_star(const StarConfiguration& star) {
  star.validate();
  const int n_sets = static_cast<int>(star.maps.size());
  MatchConfiguration config(n_sets, star.node_count);
  for (int i = 0; i < n_sets - 1; ++i) {
    const Correspondence from_i = star.maps[i].inverse();  // X_ir as a vector map
    for (int j = i + 1; j < n_sets; ++j) {
      // X_ij = X_ir^T X_rj: go from set i back to the reference, then out to j.
      config.set_pair(i, j, compose(from_i, star.maps[j]));
    }
  }
  return config;
}

}  // namespace msm
