#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nahopf/attractor.hpp"

using namespace nahopf;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ModelSystem rotation_system(double beta_kappa) {
  return {BaseSystem::rotation(), CocycleSpec::rotation(kTwoPi * 0.1), HFunction::arctan(kGoldenArctanKappa),
          beta_kappa / kGoldenArctanKappa};
}

// Scalar pullback r <- kappa * atan(beta * r), valid whenever the cocycle is a rotation.
double scalar_pullback(double beta, std::int64_t depth) {
  double r = 1.0;
  for (std::int64_t k = 0; k < depth; ++k) r = kGoldenArctanKappa * std::atan(beta * r);
  return r;
}

PsiField synthetic(int n, int m, double fill) {
  PsiField f;
  f.grid = Grid{n, m};
  f.values.assign(static_cast<std::size_t>(n) * m, fill);
  f.ridge_alpha.assign(n, 0.0);
  f.ridge_value.assign(n, fill);
  return f;
}

}  // namespace

TEST(Grid, Validates) {
  EXPECT_THROW((Grid{1, 8}).validate(), std::invalid_argument);
  EXPECT_NO_THROW((Grid{2, 2}).validate());
  EXPECT_DOUBLE_EQ((Grid{4, 4}).alpha_node(0), 0.125);
}

TEST(ClassifyParams, Validates) {
  EXPECT_THROW((ClassifyParams{1e-3, 1e-4, 0.02}).validate(), std::invalid_argument);
  EXPECT_THROW((ClassifyParams{1e-6, 1e-4, 1.0}).validate(), std::invalid_argument);
}

TEST(Classify, SyntheticRegimes) {
  EXPECT_EQ(classify(synthetic(8, 100, 0.0)).regime, Regime::Trivial);
  EXPECT_EQ(classify(synthetic(8, 100, 0.3)).regime, Regime::Torus);

  PsiField seg = synthetic(8, 100, 0.0);
  for (int i = 0; i < 8; ++i) seg.ridge_value[i] = 0.2;
  const RegimeReport rep = classify(seg);
  EXPECT_EQ(rep.regime, Regime::Segment);
  EXPECT_DOUBLE_EQ(rep.positive_fraction.max, 0.01);

  PsiField wide = seg;
  for (int j = 0; j < 10; ++j) wide.values[j] = 0.1;
  EXPECT_EQ(classify(wide).regime, Regime::Indeterminate);

  PsiField faint = synthetic(8, 100, 0.0);
  faint.ridge_value.assign(8, 1e-5);
  EXPECT_EQ(classify(faint).regime, Regime::Indeterminate);
}

TEST(PsiField, RotationCocycleMatchesScalarOracle) {
  const ModelSystem sys = rotation_system(1.3);
  const PsiField f = psi_field(sys.polar(), Grid{16, 16}, 500, 1);
  const double oracle = scalar_pullback(sys.beta, 500);
  for (double v : f.values) EXPECT_NEAR(v, oracle, 1e-12);
  for (double v : f.ridge_value) EXPECT_NEAR(v, oracle, 1e-12);
  EXPECT_EQ(classify(f).regime, Regime::Torus);
}

TEST(PsiField, RotationSweepHasNoSegmentBand) {
  for (double bk : {0.5, 0.8, 0.9}) {
    EXPECT_EQ(classify(psi_field(rotation_system(bk).polar(), Grid{16, 16}, 3000, 1)).regime, Regime::Trivial);
  }
  for (double bk : {1.1, 1.3, 2.0}) {
    EXPECT_EQ(classify(psi_field(rotation_system(bk).polar(), Grid{16, 16}, 3000, 1)).regime, Regime::Torus);
  }
}

TEST(PsiField, ThreadCountDoesNotChangeResult) {
  const PolarSystem sys = golden_arctan_system(4.475).polar();
  const PsiField one = psi_field(sys, Grid{48, 40}, 300, 1);
  const PsiField four = psi_field(sys, Grid{48, 40}, 300, 4);
  EXPECT_EQ(one.values, four.values);
  EXPECT_EQ(one.ridge_value, four.ridge_value);
  EXPECT_EQ(one.ridge_alpha, four.ridge_alpha);
}

TEST(PsiField, NodeValuesMatchPointPullback) {
  const PolarSystem sys = golden_arctan_system(5.0).polar();
  const Grid grid{8, 8};
  const PsiField f = psi_field(sys, grid, 200, 1);
  for (int i = 0; i < 8; i += 3) {
    for (int j = 0; j < 8; j += 3) {
      EXPECT_NEAR(f.at(i, j), psi_plus_point(sys, f.rows[i], ProjAngle(grid.alpha_node(j)), 200), 1e-13);
    }
  }
}

TEST(PsiField, BoundedByStartRadius) {
  const PsiField f = psi_field(golden_arctan_system(8.0).polar(), Grid{32, 32}, 100, 1);
  for (double v : f.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, f.r_start);
  }
}

TEST(PsiField, RidgeCarriesSegment) {
  const PolarSystem sys = golden_arctan_system(4.08).polar();
  const BasePoint t = sys.base.at_angle(0.3);
  const RidgeSample ridge = unstable_ridge(sys, t, 3000);
  EXPECT_GT(ridge.value, 0.05);
  const DirectionEstimate u = unstable_direction(sys.cocycle, sys.base, t, 3000);
  EXPECT_LT(projective_distance(ridge.alpha, u.angle), 1e-6);
  EXPECT_LT(psi_plus_point(sys, t, ProjAngle(u.angle.value + 0.25), 3000), 1e-20);
}

TEST(PsiField, RandomBaseRowsAreSymbols) {
  const PolarSystem sys{BaseSystem::random_shift(3, 2, 5000),
                        CocycleSpec::matrix_list({Mat2::diag(2.0, 0.5), rotation_matrix(1.0)}),
                        HFunction::arctan(1.0), 3.0};
  const PsiField f = psi_field(sys, Grid{8, 16}, 500, 1);
  EXPECT_FALSE(f.rotation_base);
  EXPECT_DOUBLE_EQ(f.row_coordinate(5), 5.0);
  const ResidualReport rep = invariance_residual(f, sys);
  EXPECT_TRUE(std::isfinite(rep.max_residual));
}

TEST(PsiField, DepthMustBePositive) {
  EXPECT_THROW(psi_field(golden_arctan_system(4.0).polar(), Grid{4, 4}, 0), std::invalid_argument);
}

TEST(TorusBoundary, RejectsNonTorus) {
  const PsiField f = psi_field(rotation_system(0.5).polar(), Grid{8, 8}, 200, 1);
  EXPECT_THROW(torus_boundary(f), std::logic_error);
}

TEST(TorusBoundary, CircleForRotationCocycle) {
  const ModelSystem sys = rotation_system(1.3);
  const PsiField f = psi_field(sys.polar(), Grid{16, 16}, 500, 1);
  const auto curves = torus_boundary(f);
  ASSERT_EQ(curves.size(), 16u);
  const double r = scalar_pullback(sys.beta, 500);
  for (const auto& c : curves) {
    ASSERT_EQ(c.points.size(), c.radius.size());
    for (double rad : c.radius) EXPECT_NEAR(rad, r, 1e-12);
    for (std::size_t k = 1; k < c.plane_alpha.size(); ++k) EXPECT_GT(c.plane_alpha[k], c.plane_alpha[k - 1]);
  }
  EXPECT_LT(max_adjacent_jump(curves), kTwoPi * r / 16.0);
}

TEST(TwoPointForward, RejectsStableInitialVector) {
  const ModelSystem sys = golden_arctan_system(4.475);
  const BasePoint t = sys.base.at_angle(0.2);
  const DirectionEstimate s = stable_direction(sys.cocycle, sys.base, t, 3000);
  EXPECT_THROW(two_point_forward(sys, t, unit_vector(s.angle), 100, 10), std::invalid_argument);
}

TEST(TwoPointForward, ZeroStaysZero) {
  const ModelSystem sys = golden_arctan_system(4.475);
  const ForwardReport rep = two_point_forward(sys, sys.base.at_angle(0.2), {0.0, 0.0}, 50, 10, 200);
  for (double n : rep.norms) EXPECT_EQ(n, 0.0);
  EXPECT_EQ(rep.norms.size(), 51u);
}

TEST(TwoPointForward, ConvergesInSegmentRegime) {
  const ModelSystem sys = golden_arctan_system(4.08);
  const ForwardReport rep = two_point_forward(sys, sys.base.at_angle(0.6), {0.1, 0.7}, 3000, 2500);
  EXPECT_LT(rep.max_distance_after_burn_in, 1e-4);
  EXPECT_GT(rep.endpoint_radius.back(), 0.0);
}

TEST(Cesaro, MatchesScalarOracle) {
  const ModelSystem sys = rotation_system(1.0);
  const Vec2 v{0.3, 0.2};
  double r = norm(v);
  double sum = 0.0;
  for (int i = 0; i < 5000; ++i) {
    sum += r;
    r = kGoldenArctanKappa * std::atan(sys.beta * r);
  }
  EXPECT_NEAR(cesaro_average(sys, sys.base.at_angle(0.0), v, 5000), sum / 5000.0, 1e-13);
  EXPECT_THROW(cesaro_average(sys, sys.base.at_angle(0.0), v, 0), std::invalid_argument);
}

TEST(InvarianceResidual, VanishesForConstantGraph) {
  const ModelSystem sys = rotation_system(1.3);
  const PsiField f = psi_field(sys.polar(), Grid{16, 16}, 500, 1);
  EXPECT_LT(invariance_residual(f, sys.polar()).max_residual, 1e-12);
}

TEST(InvarianceResidual, ShrinksUnderRefinement) {
  const PolarSystem sys = golden_arctan_system(6.08).polar();
  const double coarse = invariance_residual(psi_field(sys, Grid{32, 32}, 300, 1), sys).max_residual;
  const double fine = invariance_residual(psi_field(sys, Grid{64, 64}, 300, 1), sys).max_residual;
  EXPECT_LT(fine, coarse);
}

TEST(InvarianceResidual, RejectsMismatchedSystem) {
  const PsiField f = psi_field(golden_arctan_system(6.08).polar(), Grid{4, 4}, 10, 1);
  EXPECT_THROW(invariance_residual(f, golden_arctan_system(5.0).polar()), std::invalid_argument);
}
