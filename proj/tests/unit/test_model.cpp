#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nahopf/model.hpp"

using namespace nahopf;

TEST(HFunction, ArctanProperties) {
  const HFunction h = HFunction::arctan(0.5);
  EXPECT_EQ(h(0.0), 0.0);
  EXPECT_DOUBLE_EQ(h.sup(), 0.25 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(h.slope_at_zero(), 0.5);
  EXPECT_THROW(HFunction::arctan(0.0), std::invalid_argument);
}

TEST(RTop, ExampleIsOne) {
  // sup h * max |A| = (pi / (6 sqrt 2)) * sqrt 2 = pi / 6
  EXPECT_DOUBLE_EQ(r_top(golden_arctan_system(4.0)), 1.0);
}

TEST(RTop, CustomLargeBound) {
  const HFunction h = HFunction::custom([](double x) { return 2.0 * std::tanh(x); },
                                        [](double x) { return 2.0 / std::pow(std::cosh(x), 2); }, 2.0, 2.0);
  EXPECT_NEAR(r_top(CocycleSpec::constant(Mat2::diag(2.0, 0.5)), h), 4.0, 1e-12);
}

TEST(RTop, SmallBoundClampsToOne) {
  const HFunction h = HFunction::custom([](double x) { return 0.1 * std::tanh(x); },
                                        [](double x) { return 0.1 / std::pow(std::cosh(x), 2); }, 0.1, 0.1);
  EXPECT_DOUBLE_EQ(r_top(CocycleSpec::rotation(1.0), h), 1.0);
}

TEST(RTop, FibreMapsStayInside) {
  const ModelSystem sys = golden_arctan_system(50.0);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 v{unit(rng), unit(rng)};
    const BasePoint t = sys.base.at_angle(std::abs(unit(rng)) / 100.0);
    ASSERT_LE(norm(fibre_map(sys, t, v)), r_top(sys));
  }
}

TEST(FibreMap, OddSymmetryAndZero) {
  const ModelSystem sys = golden_arctan_system(4.475);
  const BasePoint t = sys.base.at_angle(0.7);
  const Vec2 v{0.3, -0.8};
  const Vec2 a = fibre_map(sys, t, v);
  const Vec2 b = fibre_map(sys, t, {-v.x, -v.y});
  EXPECT_EQ(a.x, -b.x);
  EXPECT_EQ(a.y, -b.y);
  const Vec2 z = fibre_map(sys, t, {0.0, 0.0});
  EXPECT_EQ(z.x, 0.0);
  EXPECT_EQ(z.y, 0.0);
}

TEST(FibreMap, MatchesDefinition) {
  const ModelSystem sys = golden_arctan_system(4.0);
  const BasePoint t = sys.base.at_angle(0.0);
  const Vec2 v{0.6, 0.0};
  // A(0) v / |v| = (sqrt 2, 0)
  const Vec2 out = fibre_map(sys, t, v);
  EXPECT_NEAR(out.x, kGoldenArctanKappa * std::atan(4.0 * 0.6) * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(out.y, 0.0, 1e-15);
}

TEST(Iterate, ComposesSingleSteps) {
  const ModelSystem sys = golden_arctan_system(4.5);
  BasePoint t = sys.base.at_angle(0.11);
  Vec2 v{0.2, 0.4};
  const ModelState all = iterate(sys, t, v, 17);
  for (int k = 0; k < 17; ++k) {
    v = fibre_map(sys, t, v);
    t = sys.base.advance(t, 1);
  }
  EXPECT_EQ(all.theta, t);
  EXPECT_EQ(all.v.x, v.x);
  EXPECT_EQ(all.v.y, v.y);
  EXPECT_THROW(iterate(sys, t, v, -1), std::invalid_argument);
}

TEST(CriticalBetas, ClosedForm) {
  const double lambda = std::log(3.0 / (2.0 * std::sqrt(2.0)));
  const CriticalBetas cb = critical_betas(HFunction::arctan(kGoldenArctanKappa), lambda);
  EXPECT_NEAR(cb.beta1, 4.0, 1e-12);
  EXPECT_NEAR(cb.beta2, 4.5, 1e-12);
}

TEST(CriticalBetas, ZeroExponentCollapses) {
  const CriticalBetas cb = critical_betas(HFunction::arctan(kGoldenArctanKappa), 0.0);
  EXPECT_DOUBLE_EQ(cb.beta1, cb.beta2);
  EXPECT_NEAR(cb.beta1, 3.0 * std::sqrt(2.0), 1e-12);
}

TEST(CriticalBetas, RejectsBadInput) {
  EXPECT_THROW(critical_betas(HFunction::arctan(1.0), -0.1), std::invalid_argument);
  const HFunction flat = HFunction::custom([](double) { return 0.0; }, [](double) { return 0.0; }, 0.0, 0.0);
  EXPECT_THROW(critical_betas(flat, 0.1), std::invalid_argument);
}

TEST(D2Check, ArctanPasses) {
  const D2Report rep = d2_check(HFunction::arctan(kGoldenArctanKappa), 2000);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_NEAR(rep.measured_slope, kGoldenArctanKappa, 1e-6);
}

TEST(D2Check, SaturatingExponentialPasses) {
  const HFunction h = HFunction::custom([](double x) { return 1.0 - std::exp(-x); },
                                        [](double x) { return std::exp(-x); }, 1.0, 1.0, "1-exp(-x)");
  EXPECT_TRUE(d2_check(h, 2000).all_pass());
}

TEST(D2Check, SquareFails) {
  const HFunction h = HFunction::custom([](double x) { return x * x; }, [](double x) { return 2.0 * x; },
                                        1.0, 0.0, "x^2");
  const D2Report rep = d2_check(h, 2000);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_FALSE(rep.concave);
  EXPECT_FALSE(rep.bounded);
}

TEST(D2Check, WrongDeclaredSlopeFails) {
  const HFunction h = HFunction::custom([](double x) { return std::atan(x); },
                                        [](double x) { return 1.0 / (1.0 + x * x); }, std::numbers::pi / 2,
                                        0.5);
  EXPECT_FALSE(d2_check(h, 500).slope_matches);
}
