#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace msm {

// Dense rectangular cost matrix, row-major. Entries must be finite.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(int rows, int cols, double fill = 0.0);

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  CostMatrix transposed() const;
  CostMatrix negated() const;

  // Throws std::invalid_argument on empty dimensions or non-finite entries.
  void validate() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// A full permutation: row i of the (padded) problem is assigned column map[i].
class Correspondence {
 public:
  Correspondence() = default;
  explicit Correspondence(std::vector<int> row_to_col);  // validates bijectivity
  static Correspondence identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int row) const { return map_[row]; }
  const std::vector<int>& mapping() const { return map_; }

  Correspondence inverse() const;

  // Lossless round trip through the n-by-n 0/1 matrix form.
  std::vector<std::vector<int>> to_matrix() const;
  static Correspondence from_matrix(const std::vector<std::vector<int>>& m);

  bool operator==(const Correspondence&) const = default;

 private:
  std::vector<int> map_;
};

// then-after-first composition: result(i) = then(first(i)).
Correspondence compose(const Correspondence& first, const Correspondence& then);

struct LapResult {
  Correspondence assignment;
  double total_cost = 0.0;
};

struct PadInfo {
  bool transposed = false;  // input had more rows than columns
  int dummy_rows = 0;       // zero-cost rows appended after orientation
  bool empty() const { return !transposed && dummy_rows == 0; }
};

// Exact minimum-cost assignment of a square matrix. Ties between optimal
// permutations are broken toward the lexicographically smallest assignment
// vector, the same rule brute_force_lap uses.
LapResult solve_lap(const CostMatrix& cost);

// Orients the smaller side as rows and appends zero-cost dummy rows until
// square. Dummy rows cost the same in every column, so the padded optimum
// restricted to real rows is an optimal injective assignment of the input.
std::pair<CostMatrix, PadInfo> pad_to_square(const CostMatrix& cost);

// Factorial-enumeration oracle; refuses n > 9.
LapResult brute_force_lap(const CostMatrix& cost);

// Process-wide count of solve_lap invocations (brute force excluded).
std::uint64_t lap_call_count();
void reset_lap_call_count();

}  // namespace msm
