#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "msm/assignment.hpp"
#include "msm/rng.hpp"
#include "oracles.hpp"

using msm::CostMatrix;
using msm::Correspondence;

namespace {

CostMatrix make(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  CostMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("solve_lap: 1x1") {
  const auto result = msm::solve_lap(make({{0.0}}));
  CHECK(result.assignment.mapping() == std::vector<int>{0});
  CHECK(result.total_cost == 0.0);
}

TEST_CASE("solve_lap: 3x3 hand-enumerated instance") {
  // all 3! totals: 6, 11, 5, 9, 7, 6 -> optimum 5 at (1,0,2)
  const auto result = msm::solve_lap(make({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}));
  CHECK(result.assignment.mapping() == std::vector<int>{1, 0, 2});
  CHECK(result.total_cost == 5.0);
}

TEST_CASE("solve_lap: zero diagonal dominates") {
  for (const int n : {2, 4, 7}) {
    CostMatrix cost(n, n, 1.0);
    for (int i = 0; i < n; ++i) cost(i, i) = 0.0;
    const auto result = msm::solve_lap(cost);
    CHECK(result.assignment == Correspondence::identity(n));
    CHECK(result.total_cost == 0.0);
  }
}

TEST_CASE("solve_lap: rejects non-square and non-finite input") {
  CHECK_THROWS_AS(msm::solve_lap(make({{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
  CostMatrix bad(2, 2, 0.0);
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS(msm::solve_lap(bad), std::invalid_argument);
}

TEST_CASE("solve_lap: lexicographic tie-break on degenerate matrices") {
  CHECK(msm::solve_lap(make({{0, 0}, {0, 0}})).assignment.mapping() == std::vector<int>{0, 1});
  CHECK(msm::solve_lap(make({{5, 5, 5}, {5, 5, 5}, {5, 5, 5}})).assignment.mapping() ==
        std::vector<int>{0, 1, 2});
  // two optima with total 0: (0,1,2) and (1,2,0); lexicographically smaller wins
  const auto result = msm::solve_lap(make({{0, 0, 9}, {9, 0, 0}, {0, 9, 0}}));
  CHECK(result.assignment.mapping() == std::vector<int>{0, 1, 2});
  CHECK(result.total_cost == 0.0);
}

TEST_CASE("brute_force_lap: base cases and refusal guard") {
  CHECK(msm::brute_force_lap(make({{0.0}})).assignment.mapping() == std::vector<int>{0});
  const auto result = msm::brute_force_lap(make({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}));
  CHECK(result.assignment.mapping() == std::vector<int>{1, 0, 2});
  CHECK(result.total_cost == 5.0);
  CHECK_THROWS_AS(msm::brute_force_lap(CostMatrix(10, 10, 1.0)), std::invalid_argument);
}

TEST_CASE("solve_lap matches brute force on random instances") {
  msm::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + rng.bounded(6);  // 2..7
    const auto cost = oracles::random_cost(rng, n, n);
    const auto fast = msm::solve_lap(cost);
    const auto slow = msm::brute_force_lap(cost);
    REQUIRE(fast.total_cost == slow.total_cost);
    REQUIRE(fast.assignment == slow.assignment);
  }
}

TEST_CASE("solve_lap matches brute force on tie-heavy integer instances") {
  msm::Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + rng.bounded(4);  // 2..5
    CostMatrix cost(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) cost(r, c) = rng.bounded(3);  // many equal optima
    const auto fast = msm::solve_lap(cost);
    const auto slow = msm::brute_force_lap(cost);
    REQUIRE(fast.total_cost == slow.total_cost);
    REQUIRE(fast.assignment == slow.assignment);
  }
}

TEST_CASE("solve_lap: transposition duality at unique optima") {
  msm::Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng.bounded(5);
    const auto cost = oracles::random_cost(rng, n, n);
    const auto forward = msm::solve_lap(cost);
    const auto backward = msm::solve_lap(cost.transposed());
    CHECK(backward.assignment == forward.assignment.inverse());
  }
}

TEST_CASE("Correspondence: permutation validation and matrix round trip") {
  CHECK_THROWS_AS(Correspondence({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Correspondence({0, 2}), std::invalid_argument);

  msm::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = oracles::random_correspondence(rng, 1 + rng.bounded(9));
    CHECK(Correspondence::from_matrix(x.to_matrix()) == x);
    CHECK(msm::compose(x, x.inverse()) == Correspondence::identity(x.size()));
  }
}

TEST_CASE("pad_to_square: already-square input is unchanged") {
  const auto [padded, info] = msm::pad_to_square(make({{1, 2}, {3, 4}}));
  CHECK(info.empty());
  CHECK(padded.rows() == 2);
  CHECK(padded(1, 0) == 3.0);
}

TEST_CASE("pad_to_square: wide input gains zero dummy rows") {
  const auto [padded, info] = msm::pad_to_square(make({{1, 2, 3}, {4, 5, 6}}));
  CHECK(!info.transposed);
  CHECK(info.dummy_rows == 1);
  REQUIRE(padded.rows() == 3);
  for (int c = 0; c < 3; ++c) CHECK(padded(2, c) == 0.0);
}

TEST_CASE("pad_to_square: tall input is transposed first") {
  const auto [padded, info] = msm::pad_to_square(make({{1}, {2}, {3}}));
  CHECK(info.transposed);
  CHECK(info.dummy_rows == 2);
  CHECK(padded.rows() == 3);
  CHECK(padded(0, 1) == 2.0);
}

TEST_CASE("pad_to_square: padded optimum equals best injective assignment") {
  msm::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + rng.bounded(4);                  // 1..4
    const int cols = rows + 1 + rng.bounded(5 - rows);    // rows+1..5
    const auto cost = oracles::random_cost(rng, rows, cols);
    const auto [padded, info] = msm::pad_to_square(cost);
    const double padded_optimum = msm::solve_lap(padded).total_cost;
    const double injective = oracles::brute_force_injective_cost(cost);
    CHECK(padded_optimum == doctest::Approx(injective).epsilon(1e-12));
  }
}

TEST_CASE("lap call counter counts solve_lap only") {
  msm::reset_lap_call_count();
  const auto cost = make({{1, 2}, {3, 4}});
  msm::solve_lap(cost);
  msm::solve_lap(cost);
  msm::brute_force_lap(cost);
  CHECK(msm::lap_call_count() == 2);
}
