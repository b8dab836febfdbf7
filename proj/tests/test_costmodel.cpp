#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "msm/costmodel.hpp"
#include "msm/rng.hpp"

using msm::CostParams;
using msm::FeatureMatrix;

namespace {

FeatureMatrix random_features(msm::Rng& rng, int dim, int nodes, int id = 0) {
  FeatureMatrix fm(dim, nodes, id);
  for (int t = 0; t < nodes; ++t)
    for (int d = 0; d < dim; ++d) fm.at(t, d) = rng.uniform01();
  return fm;
}

}  // namespace

TEST_CASE("build_cost: identical columns get affinity exactly 1") {
  msm::Rng rng(11);
  const auto a = random_features(rng, 5, 6);
  const auto cost = msm::build_cost(a, a, CostParams{});
  for (int s = 0; s < 6; ++s) CHECK(cost(s, s) == 1.0);
}

TEST_CASE("build_cost: direct formula evaluation") {
  // D=2, f_s=(0,0), f_t=(3,4): distance 5, affinity exp(-5 / (0.15 * 2))
  FeatureMatrix a(2, 1), b(2, 1);
  b.at(0, 0) = 3.0;
  b.at(0, 1) = 4.0;
  const auto cost = msm::build_cost(a, b, CostParams{0.15});
  CHECK(cost(0, 0) == std::exp(-5.0 / (0.15 * 2.0)));
  CHECK(cost(0, 0) == doctest::Approx(5.78e-8).epsilon(1e-2));
}

TEST_CASE("build_cost: range, symmetry, monotonicity") {
  msm::Rng rng(12);
  const auto a = random_features(rng, 4, 7, 0);
  const auto b = random_features(rng, 4, 5, 1);
  const auto ab = msm::build_cost(a, b, CostParams{});
  const auto ba = msm::build_cost(b, a, CostParams{});

  for (int s = 0; s < 7; ++s)
    for (int t = 0; t < 5; ++t) {
      CHECK(ab(s, t) > 0.0);
      CHECK(ab(s, t) <= 1.0);
      CHECK(ab(s, t) == ba(t, s));
    }

  // larger distance -> strictly smaller affinity, per row
  for (int s = 0; s < 7; ++s) {
    for (int t1 = 0; t1 < 5; ++t1)
      for (int t2 = 0; t2 < 5; ++t2) {
        double d1 = 0.0, d2 = 0.0;
        for (int d = 0; d < 4; ++d) {
          d1 += (a.at(s, d) - b.at(t1, d)) * (a.at(s, d) - b.at(t1, d));
          d2 += (a.at(s, d) - b.at(t2, d)) * (a.at(s, d) - b.at(t2, d));
        }
        if (std::sqrt(d1) > std::sqrt(d2) + 1e-9) CHECK(ab(s, t1) < ab(s, t2));
      }
  }
}

TEST_CASE("build_cost: default sigma_sq is 0.15") {
  CHECK(CostParams{}.sigma_sq == 0.15);
}

TEST_CASE("build_cost: dimension mismatch and bad params are rejected") {
  FeatureMatrix a(2, 1), b(3, 1);
  CHECK_THROWS_AS(msm::build_cost(a, b, CostParams{}), std::invalid_argument);
  FeatureMatrix c(2, 1);
  CHECK_THROWS_AS(msm::build_cost(a, c, CostParams{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(msm::build_cost(a, c, CostParams{-1.0}), std::invalid_argument);
}

TEST_CASE("build_cost: dummy nodes have zero affinity everywhere") {
  msm::Rng rng(13);
  auto a = random_features(rng, 3, 4);
  auto b = random_features(rng, 3, 4);
  a.append_dummy_nodes(2);
  const auto cost = msm::build_cost(a, b, CostParams{});
  for (int t = 0; t < 4; ++t) {
    CHECK(cost(4, t) == 0.0);
    CHECK(cost(5, t) == 0.0);
  }
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) CHECK(cost(s, t) > 0.0);
}

TEST_CASE("FeatureMatrix: validation") {
  CHECK_THROWS_AS(FeatureMatrix(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(FeatureMatrix(3, 0), std::invalid_argument);
  FeatureMatrix fm(2, 2);
  fm.at(1, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(fm.validate(), std::invalid_argument);
}
