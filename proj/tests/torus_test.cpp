#include "flatmod/torus.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "checks.hpp"
#include "support/brute_force.hpp"

namespace flatmod {
namespace {

using Z = std::complex<double>;

void expect_complex_near(Z actual, Z expected, double tol) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

TEST(CurveClassTest, ReducesNonPrimitiveInput) {
  const CurveClass c(4, -6);
  EXPECT_EQ(c.m(), 2);
  EXPECT_EQ(c.n(), -3);
  EXPECT_EQ(c.multiplicity(), 2);
  EXPECT_TRUE(c.was_reduced());
  EXPECT_FALSE(CurveClass(3, 5).was_reduced());
  EXPECT_EQ(CurveClass(0, -7), CurveClass(0, -1));
  EXPECT_THROW(CurveClass(0, 0), std::invalid_argument);
}

TEST(MakeTorusTest, Examples) {
  const MarkedTorus square = make_torus(HPoint(0, 1), Normalization::UnitArea);
  expect_complex_near(square.omega1(), 1.0, 1e-15);
  expect_complex_near(square.omega2(), Z(0, 1), 1e-15);

  const MarkedTorus tall = make_torus(HPoint(0, 2), Normalization::UnitArea);
  expect_complex_near(tall.omega1(), 1.0 / std::sqrt(2.0), 1e-15);
  expect_complex_near(tall.omega2(), Z(0, std::sqrt(2.0)), 1e-15);

  const MarkedTorus generator = make_torus(HPoint(0, 2), Normalization::UnitGenerator);
  EXPECT_EQ(generator.omega1(), Z(1.0));
  EXPECT_EQ(generator.omega2(), Z(0, 2));
}

TEST(MakeTorusTest, UnitAreaAndOrientationOnRandomTau) {
  checks::Sampler rng(201);
  for (int k = 0; k < 1000; ++k) {
    const MarkedTorus t = make_torus(rng.plane_point(), Normalization::UnitArea);
    EXPECT_NEAR(t.area(), 1.0, 1e-12);
    EXPECT_GT((t.omega2() / t.omega1()).imag(), 0.0);
    EXPECT_EQ(t.omega1().imag(), 0.0);
    EXPECT_GT(t.omega1().real(), 0.0);
  }
}

TEST(CurveLengthTest, Examples) {
  EXPECT_DOUBLE_EQ(curve_length(make_torus(HPoint(0, 1), Normalization::UnitArea), {1, 0}), 1.0);
  EXPECT_NEAR(curve_length(make_torus(HPoint(0, 2), Normalization::UnitArea), {0, 1}),
              std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(curve_length(make_torus(HPoint(0, 2), Normalization::UnitGenerator), {0, 1}),
                   2.0);
}

TEST(CurveLengthTest, StraightRepresentativeIsShortestInItsClass) {
  checks::Sampler rng(202);
  const MarkedTorus t = make_torus(HPoint(0.3, 1.4), Normalization::UnitArea);
  for (int k = 0; k < 10; ++k) {
    const CurveClass c(rng.uniform_int(-6, 6), rng.uniform_int(1, 6));
    const Z v = t.lattice_vector(c.m(), c.n());
    double shortest = testing::wiggled_loop_length(v, 0.0, 1, 10000);
    for (int w = 0; w < 8; ++w) {
      const double loop = testing::wiggled_loop_length(v, rng.uniform(0.0, 0.5),
                                                       rng.uniform_int(1, 5), 10000);
      EXPECT_GE(loop, curve_length(t, c) - 1e-12);
      shortest = std::min(shortest, loop);
    }
    EXPECT_NEAR(shortest, curve_length(t, c), 0.01 * curve_length(t, c));
  }
}

TEST(TorusDistanceTest, Examples) {
  const MarkedTorus square = make_torus(HPoint(0, 1), Normalization::UnitArea);
  EXPECT_EQ(torus_distance(square, Z(0.3, 0.4), Z(0.3, 0.4)), 0.0);
  EXPECT_NEAR(torus_distance(square, 0.0, 0.9), 0.1, 1e-15);
  EXPECT_NEAR(torus_distance(square, 0.0, Z(0.5, 0.5)), std::sqrt(2.0) / 2.0, 1e-15);
}

TEST(TorusDistanceTest, MatchesBruteForceOnSkewedLattices) {
  checks::Sampler rng(203);
  for (int k = 0; k < 300; ++k) {
    const MarkedTorus t = make_torus(rng.metric_point(), Normalization::UnitArea);
    const Z x(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Z y(rng.uniform(-3, 3), rng.uniform(-3, 3));
    EXPECT_NEAR(torus_distance(t, x, y),
                testing::brute_torus_distance(t.omega1(), t.omega2(), x, y, 40), 1e-12);
  }
}

TEST(TorusDistanceTest, MetricAxiomsAndLiftBound) {
  checks::Sampler rng(204);
  for (int k = 0; k < 1000; ++k) {
    const MarkedTorus t = make_torus(rng.metric_point(), Normalization::UnitArea);
    const Z x(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Z y(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const Z z(rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double xy = torus_distance(t, x, y);
    EXPECT_NEAR(xy, torus_distance(t, y, x), 1e-12);
    EXPECT_GE(xy, 0.0);
    EXPECT_LE(torus_distance(t, x, z), xy + torus_distance(t, y, z) + 1e-12);
    EXPECT_LE(xy, std::abs(x - y) + 1e-12);
    EXPECT_NEAR(torus_distance(t, x, x + t.lattice_vector(3, -2)), 0.0, 1e-12);
  }
}

TEST(SystoleTest, Examples) {
  const SystoleResult square = systole(make_torus(HPoint(0, 1), Normalization::UnitArea));
  EXPECT_NEAR(square.length, 1.0, 1e-15);
  EXPECT_TRUE(square.curve == CurveClass(1, 0) || square.curve == CurveClass(0, 1));

  const MarkedTorus tall = make_torus(HPoint(0, 2), Normalization::UnitArea);
  const SystoleResult s2 = systole(tall);
  EXPECT_EQ(s2.curve, CurveClass(1, 0));
  EXPECT_NEAR(s2.length, testing::box_shortest_vector(tall.omega1(), tall.omega2(), 50), 1e-15);
  EXPECT_NEAR(s2.length, 1.0 / std::sqrt(2.0), 1e-15);

  const MarkedTorus hex = make_torus(HPoint(0.5, std::sqrt(3.0) / 2.0), Normalization::UnitArea);
  const double hex_oracle = testing::box_shortest_vector(hex.omega1(), hex.omega2(), 50);
  EXPECT_NEAR(hex_oracle, std::pow(4.0 / 3.0, 0.25), 1e-12);
  EXPECT_NEAR(systole(hex).length, hex_oracle, 1e-12);
}

TEST(SystoleTest, MinimalOverTheEnumerationBox) {
  checks::Sampler rng(205);
  for (int k = 0; k < 50; ++k) {
    const MarkedTorus t = make_torus(rng.metric_point(), Normalization::UnitArea);
    const SystoleResult s = systole(t);
    EXPECT_NEAR(s.length, curve_length(t, s.curve), 1e-12);
    EXPECT_NEAR(s.length, testing::box_shortest_vector(t.omega1(), t.omega2(), 50), 1e-12);
  }
}

}  // namespace
}  // namespace flatmod
