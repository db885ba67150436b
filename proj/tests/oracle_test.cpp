#include "flatmod/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace flatmod::oracle {
namespace {

TEST(SamplingConfigTest, Validation) {
  EXPECT_NO_THROW(SamplingConfig{}.validate());
  SamplingConfig cfg;
  cfg.grid_n = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.direction_samples = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.random_pairs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(SampledLipschitzTest, IdentityAndIsometry) {
  const MarkedTorus t = make_torus(HPoint(0.3, 1.2), Normalization::UnitArea);
  SamplingConfig cfg;
  cfg.grid_n = 30;
  EXPECT_NEAR(sampled_lipschitz([](std::complex<double> z) { return z; }, t, t, cfg), 1.0, 1e-12);
  // A lattice translation is an isometry of the quotient.
  const auto shift = t.lattice_vector(2, -1) + std::complex<double>(0.1, 0.05);
  EXPECT_NEAR(sampled_lipschitz([&](std::complex<double> z) { return z + shift; }, t, t, cfg), 1.0,
              1e-12);
}

TEST(SampledLipschitzTest, ExhaustiveAndRandomModesAreLowerBounds) {
  const MarkedTorus a = make_torus(HPoint(0, 1), Normalization::UnitArea);
  const MarkedTorus b = make_torus(HPoint(1, 1), Normalization::UnitArea);
  const LinearMap2 shear(1, 1, 0, 1);
  const double exact = (1 + std::sqrt(5.0)) / 2;
  for (const int grid : {40, 120}) {
    SamplingConfig cfg;
    cfg.grid_n = grid;
    cfg.random_pairs = 200000;
    const double sampled = sampled_lipschitz(shear, a, b, cfg);
    EXPECT_LE(sampled, exact * (1 + 1e-12));
    EXPECT_GE(sampled, exact * 0.99);
  }
}

TEST(SampledLipschitzTest, RejectsMapsThatBreakTheMarking) {
  const MarkedTorus t = make_torus(HPoint(0, 1), Normalization::UnitArea);
  SamplingConfig cfg;
  cfg.grid_n = 10;
  EXPECT_THROW(sampled_lipschitz([](std::complex<double> z) { return 0.5 * z; }, t, t, cfg),
               std::invalid_argument);
}

TEST(DirectionSampledNormTest, DiagonalMap) {
  EXPECT_NEAR(direction_sampled_norm(LinearMap2::diagonal(3, 0.5)), 3.0, 1e-12);
  EXPECT_NEAR(direction_sampled_norm(LinearMap2::diagonal(0.5, 3)), 3.0, 1e-9);
}

TEST(HyperbolicPathLengthTest, VerticalAndCircular) {
  EXPECT_NEAR(hyperbolic_path_length(HPoint(0, 1), HPoint(0, 2), poincare_weight), std::log(2.0),
              1e-8);
  EXPECT_NEAR(hyperbolic_path_length(HPoint(0, 2), HPoint(0, 1), poincare_weight), std::log(2.0),
              1e-8);
  EXPECT_NEAR(hyperbolic_path_length(HPoint(-1, 1), HPoint(1, 1), poincare_weight),
              2 * std::asinh(1.0), 1e-7);
  EXPECT_NEAR(hyperbolic_path_length(HPoint(0, 1), HPoint(0, 2), weil_petersson_weight),
              std::log(2.0) / std::sqrt(2.0), 1e-8);
}

TEST(WeightsTest, Values) {
  EXPECT_DOUBLE_EQ(poincare_weight(HPoint(5, 2)), 0.25);
  EXPECT_DOUBLE_EQ(weil_petersson_weight(HPoint(5, 2)), 0.125);
}

}  // namespace
}  // namespace flatmod::oracle
