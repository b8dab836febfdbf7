#include "msm/assignment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace msm {

namespace {

std::atomic<std::uint64_t> g_lap_calls{0};

// Row-order left fold; every total that gets compared anywhere is summed in
// this one order so equal assignments produce bit-equal totals.
double canonical_total(const CostMatrix& cost, const std::vector<int>& assignment) {
  double total = 0.0;
  for (int i = 0; i < static_cast<int>(assignment.size()); ++i) {
    total += cost(i, assignment[i]);
  }
  return total;
}

// Hungarian method with potentials (Jonker-Volgenant style augmenting rows),
// O(n^3). Returns the assignment and the dual variables; ties inside the
// shortest-path search resolve toward the smaller column index.
struct DualSolution {
  std::vector<int> row_to_col;
  std::vector<double> u, v;
};

DualSolution solve_square(const CostMatrix& cost) {
  const int n = cost.rows();
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based internals; index 0 is the virtual unassigned slot.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), char(0));
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  DualSolution out;
  out.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;
  out.u.assign(n, 0.0);
  out.v.assign(n, 0.0);
  for (int i = 1; i <= n; ++i) out.u[i - 1] = u[i];
  for (int j = 1; j <= n; ++j) out.v[j - 1] = v[j];
  return out;
}

// Sub-problem solve over explicit row/column subsets, used by the
// lexicographic tie refinement.
std::vector<int> solve_subset(const CostMatrix& cost, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  const int m = static_cast<int>(rows.size());
  CostMatrix sub(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub(a, b) = cost(rows[a], cols[b]);
  const auto sol = solve_square(sub);
  std::vector<int> mapped(m);
  for (int a = 0; a < m; ++a) mapped[a] = cols[sol.row_to_col[a]];
  return mapped;
}

// Among all assignments whose canonical total equals the optimum, pick the
// lexicographically smallest vector. Complementary slackness screens the
// candidate columns: an arc can appear in an optimal assignment only if its
// reduced cost vanishes, so rows with a unique tight column cost nothing.
void refine_lexicographic(const CostMatrix& cost, std::vector<int>& assignment,
                          const DualSolution& duals, double optimum) {
  const int n = cost.rows();
  double max_abs = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(cost(i, j)));
  const double screen_tol = 1e-8 * max_abs;

  std::vector<char> col_fixed(n, 0);
  double prefix = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < assignment[i]; ++j) {
      if (col_fixed[j]) continue;
      const double reduced = cost(i, j) - duals.u[i] - duals.v[j];
      if (reduced > screen_tol) continue;

      std::vector<int> free_rows, free_cols;
      for (int r = i + 1; r < n; ++r) free_rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (!col_fixed[c] && c != j) free_cols.push_back(c);

      std::vector<int> completion;
      if (!free_rows.empty()) completion = solve_subset(cost, free_rows, free_cols);

      double candidate = prefix + cost(i, j);
      for (std::size_t a = 0; a < completion.size(); ++a)
        candidate += cost(free_rows[a], completion[a]);

      if (candidate <= optimum) {
        assignment[i] = j;
        for (std::size_t a = 0; a < completion.size(); ++a)
          assignment[free_rows[a]] = completion[a];
        optimum = candidate;
        break;
      }
    }
    col_fixed[assignment[i]] = 1;
    prefix += cost(i, assignment[i]);
  }
}

}  // namespace

CostMatrix::CostMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("CostMatrix: dimensions must be >= 1");
}

CostMatrix CostMatrix::transposed() const {
  CostMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CostMatrix CostMatrix::negated() const {
  CostMatrix neg(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) neg.data_[k] = -data_[k];
  return neg;
}

void CostMatrix::validate() const {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("CostMatrix: empty matrix");
  for (const double x : data_) {
    if (!std::isfinite(x)) throw std::invalid_argument("CostMatrix: non-finite entry");
  }
}

Correspondence::Correspondence(std::vector<int> row_to_col) : map_(std::move(row_to_col)) {
  const int n = static_cast<int>(map_.size());
  std::vector<char> seen(n, 0);
  for (const int c : map_) {
    if (c < 0 || c >= n || seen[c])
      throw std::invalid_argument("Correspondence: mapping is not a permutation");
    seen[c] = 1;
  }
}

Correspondence Correspondence::identity(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return Correspondence(std::move(m));
}

Correspondence Correspondence::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Correspondence(std::move(inv));
}

std::vector<std::vector<int>> Correspondence::to_matrix() const {
  const int n = size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][map_[i]] = 1;
  return m;
}

Correspondence Correspondence::from_matrix(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> map(n, -1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::invalid_argument("Correspondence: matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] == 1) {
        if (map[i] != -1) throw std::invalid_argument("Correspondence: row with two ones");
        map[i] = j;
      } else if (m[i][j] != 0) {
        throw std::invalid_argument("Correspondence: entries must be 0/1");
      }
    }
    if (map[i] == -1) throw std::invalid_argument("Correspondence: row without a one");
  }
  return Correspondence(std::move(map));
}

Correspondence compose(const Correspondence& first, const Correspondence& then) {
  if (first.size() != then.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> m(first.size());
  for (int i = 0; i < first.size(); ++i) m[i] = then(first(i));
  return Correspondence(std::move(m));
}

LapResult solve_lap(const CostMatrix& cost) {
  cost.validate();
  if (cost.rows() != cost.cols())
    throw std::invalid_argument("solve_lap: cost matrix must be square; pad first");
  g_lap_calls.fetch_add(1, std::memory_order_relaxed);

  DualSolution sol = solve_square(cost);
  double total = canonical_total(cost, sol.row_to_col);
  refine_lexicographic(cost, sol.row_to_col, sol, total);

  LapResult out;
  out.total_cost = canonical_total(cost, sol.row_to_col);
  out.assignment = Correspondence(std::move(sol.row_to_col));
  return out;
}

std::pair<CostMatrix, PadInfo> pad_to_square(const CostMatrix& cost) {
  cost.validate();
  PadInfo info;
  CostMatrix oriented = cost;
  if (cost.rows() > cost.cols()) {
    oriented = cost.transposed();
    info.transposed = true;
  }
  info.dummy_rows = oriented.cols() - oriented.rows();
  if (info.dummy_rows == 0) return {oriented, info};

  const int n = oriented.cols();
  CostMatrix padded(n, n, 0.0);
  for (int r = 0; r < oriented.rows(); ++r)
    for (int c = 0; c < n; ++c) padded(r, c) = oriented(r, c);
  return {padded, info};
}

LapResult brute_force_lap(const CostMatrix& cost) {
  cost.validate();
  if (cost.rows() != cost.cols())
    throw std::invalid_argument("brute_force_lap: cost matrix must be square");
  const int n = cost.rows();
  if (n > 9) throw std::invalid_argument("brute_force_lap: refusing n > 9");

  std::vector<int> perm(n), best(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  best = perm;
  double best_total = canonical_total(cost, perm);
  // next_permutation enumerates in lexicographic order; strict improvement
  // keeps the first (lexicographically smallest) optimum.
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double total = canonical_total(cost, perm);
    if (total < best_total) {
      best_total = total;
      best = perm;
    }
  }
  return LapResult{Correspondence(std::move(best)), best_total};
}

std::uint64_t lap_call_count() { return g_lap_calls.load(std::memory_order_relaxed); }

void reset_lap_call_count() { g_lap_calls.store(0, std::memory_order_relaxed); }

}  // namespace msm
