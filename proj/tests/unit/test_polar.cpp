#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nahopf/model.hpp"
#include "nahopf/polar.hpp"

using namespace nahopf;

namespace {

PolarSystem example(double beta) { return golden_arctan_system(beta).polar(); }

}  // namespace

TEST(PolarSystem, ValidatesBeta) {
  EXPECT_THROW(example(0.0).validate(), std::invalid_argument);
  EXPECT_THROW(example(-1.0).validate(), std::invalid_argument);
  EXPECT_NO_THROW(example(4.0).validate());
}

TEST(Polar, GAndInverseRoundTrip) {
  const PolarSystem sys = example(4.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const BasePoint t = sys.base.at_angle(unit(rng));
    const ProjAngle a(unit(rng));
    const FibrePoint fwd = g(sys, t, a);
    const FibrePoint back = g_inverse(sys, fwd.theta, fwd.alpha);
    EXPECT_EQ(back.theta, t);
    EXPECT_LT(projective_distance(back.alpha, a), 1e-13);
  }
}

TEST(Polar, OmegaIsImageNorm) {
  const PolarSystem sys = example(4.0);
  const BasePoint t = sys.base.at_angle(0.0);
  // A(0) = diag(sqrt 2, 1/sqrt 2)
  EXPECT_NEAR(omega(sys, t, ProjAngle(0.0)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(omega(sys, t, ProjAngle(0.5)), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Polar, OmegaProductOfOneStep) {
  const PolarSystem sys = example(4.0);
  const BasePoint t = sys.base.at_angle(0.4);
  EXPECT_NEAR(omega_product(sys, t, ProjAngle(0.2), 1), omega(sys, t, ProjAngle(0.2)), 1e-15);
  EXPECT_THROW(omega_product(sys, t, ProjAngle(0.2), 0), std::invalid_argument);
}

TEST(Polar, FibreAtZeroAndNegative) {
  const PolarSystem sys = example(4.0);
  const BasePoint t = sys.base.at_angle(0.4);
  EXPECT_EQ(fibre(sys, t, ProjAngle(0.1), 0.0), 0.0);
  EXPECT_THROW(fibre(sys, t, ProjAngle(0.1), -1e-3), std::invalid_argument);
}

TEST(Polar, FibreDerivativeMatchesFiniteDifference) {
  const PolarSystem sys = example(4.475);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const BasePoint t = sys.base.at_angle(unit(rng));
    const ProjAngle a(unit(rng));
    const double r = 0.01 + unit(rng);
    const double h = 1e-5;
    const double fd = (fibre(sys, t, a, r + h) - fibre(sys, t, a, r - h)) / (2 * h);
    EXPECT_NEAR(fibre_derivative(sys, t, a, r), fd, 1e-8);
  }
}

TEST(Polar, DerivativeAtZero) {
  const PolarSystem sys = example(4.0);
  const BasePoint t = sys.base.at_angle(0.0);
  EXPECT_NEAR(fibre_derivative(sys, t, ProjAngle(0.0), 0.0), 4.0 * kGoldenArctanKappa * std::sqrt(2.0),
              1e-14);
}

TEST(Polar, FlowZeroStepsIsIdentity) {
  const PolarSystem sys = example(4.0);
  const PolarState s{sys.base.at_angle(0.3), ProjAngle(0.2), 0.5};
  const PolarState out = flow(sys, s, 0);
  EXPECT_EQ(out.theta, s.theta);
  EXPECT_EQ(out.alpha, s.alpha);
  EXPECT_EQ(out.r, s.r);
  EXPECT_THROW(flow(sys, s, -1), std::invalid_argument);
}

TEST(Polar, FlowConjugateToPlanarIteration) {
  const ModelSystem model = golden_arctan_system(5.0);
  const PolarSystem sys = model.polar();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const BasePoint t = sys.base.at_angle(std::abs(unit(rng)));
    const Vec2 v{unit(rng), unit(rng)};
    const ModelState planar = iterate(model, t, v, 60);
    const PolarState polar = flow(sys, {t, project(v), norm(v)}, 60);
    EXPECT_NEAR(polar.r, norm(planar.v), 1e-10 * norm(planar.v));
    EXPECT_LT(projective_distance(polar.alpha, project(planar.v)), 1e-9);
    EXPECT_EQ(polar.theta, planar.theta);
  }
}
