#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nahopf/projective.hpp"

using namespace nahopf;

TEST(ProjAngle, ReducesModuloOne) {
  EXPECT_DOUBLE_EQ(ProjAngle(1.25).value, 0.25);
  EXPECT_DOUBLE_EQ(ProjAngle(-0.25).value, 0.75);
}

TEST(Projective, UnitVectorConvention) {
  const Vec2 v = unit_vector(ProjAngle(0.5));
  EXPECT_NEAR(v.x, 0.0, 1e-15);
  EXPECT_NEAR(v.y, 1.0, 1e-15);
}

TEST(Projective, ProjectIdentifiesAntipodes) {
  EXPECT_NEAR(project({1.0, 1.0}).value, 0.25, 1e-15);
  EXPECT_NEAR(project({-1.0, -1.0}).value, 0.25, 1e-15);
  EXPECT_NEAR(project({0.0, -3.0}).value, 0.5, 1e-15);
}

TEST(Projective, ProjectZeroThrows) { EXPECT_THROW(project({0.0, 0.0}), std::invalid_argument); }

TEST(Projective, RoundTripProperty) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const ProjAngle a(unit(rng));
    const double scale = std::exp(20.0 * (unit(rng) - 0.5)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
    const Vec2 v = unit_vector(a);
    ASSERT_LT(projective_distance(project({scale * v.x, scale * v.y}), a), 1e-14);
  }
}

TEST(Projective, DistanceIsCyclic) {
  EXPECT_NEAR(projective_distance(ProjAngle(0.01), ProjAngle(0.99)), 0.02, 1e-15);
  EXPECT_NEAR(projective_distance(ProjAngle(0.0), ProjAngle(0.5)), 0.5, 1e-15);
  EXPECT_EQ(projective_distance(ProjAngle(0.3), ProjAngle(0.3)), 0.0);
}

TEST(Projective, PlaneConversion) {
  EXPECT_NEAR(projective_from_plane(0.75).value, 0.5, 1e-15);
  const PlaneAngles p = plane_from_projective(ProjAngle(0.5));
  EXPECT_NEAR(p.first, 0.25, 1e-15);
  EXPECT_NEAR(p.second, 0.75, 1e-15);
}
