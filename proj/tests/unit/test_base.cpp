#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "nahopf/base.hpp"

using namespace nahopf;

TEST(CircleRotation, AdvanceMatchesWrappedSum) {
  const BaseSystem base = BaseSystem::rotation();
  const BasePoint t = base.advance(base.at_angle(0.25), 3);
  EXPECT_NEAR(base.angle(t), std::fmod(0.25 + 3 * kGoldenRotation, 1.0), 1e-15);
}

TEST(CircleRotation, RoundTripIsExact) {
  const BaseSystem base = BaseSystem::rotation();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> steps(-5'000'000, 5'000'000);
  for (int i = 0; i < 1000; ++i) {
    const BasePoint t = base.at_angle(unit(rng));
    const std::int64_t k = steps(rng);
    EXPECT_EQ(base.advance(base.advance(t, k), -k), t);
    EXPECT_EQ(base.angle(base.advance(base.advance(t, k), -k)), base.angle(t));
  }
}

TEST(CircleRotation, AnglesStayInUnitInterval) {
  const BaseSystem base = BaseSystem::rotation(0.999999);
  BasePoint t = base.at_angle(0.9999999);
  for (int i = 0; i < 10000; ++i) {
    t = base.advance(t, 1);
    const double a = base.angle(t);
    ASSERT_GE(a, 0.0);
    ASSERT_LT(a, 1.0);
  }
}

TEST(CircleRotation, OrbitLengthAndOrder) {
  const BaseSystem base = BaseSystem::rotation();
  const BasePoint t0 = base.at_angle(0.1);
  const auto orbit = base.orbit(t0, 5, 7);
  ASSERT_EQ(orbit.size(), 13u);
  EXPECT_EQ(orbit[5], t0);
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    EXPECT_EQ(orbit[k], base.advance(t0, static_cast<std::int64_t>(k) - 5));
  }
}

TEST(CircleRotation, RejectsNonFiniteRho) {
  EXPECT_THROW(BaseSystem::rotation(NAN), std::invalid_argument);
}

TEST(WrapUnit, ReducesIntoUnitInterval) {
  EXPECT_DOUBLE_EQ(wrap_unit(1.25), 0.25);
  EXPECT_DOUBLE_EQ(wrap_unit(-0.25), 0.75);
  EXPECT_EQ(wrap_unit(-1e-20), 0.0);
  EXPECT_LT(wrap_unit(std::nextafter(1.0, 0.0)), 1.0);
}

TEST(RandomShift, SameSeedSameSymbols) {
  const BaseSystem a = BaseSystem::random_shift(42, 3, 1000);
  const BaseSystem b = BaseSystem::random_shift(42, 3, 1000);
  for (std::int64_t i = -1000; i <= 1000; ++i) {
    ASSERT_EQ(a.symbol(a.at_index(i)), b.symbol(b.at_index(i)));
  }
}

TEST(RandomShift, DifferentSeedsDiffer) {
  const BaseSystem a = BaseSystem::random_shift(1, 2, 1000);
  const BaseSystem b = BaseSystem::random_shift(2, 2, 1000);
  int differ = 0;
  for (std::int64_t i = -1000; i <= 1000; ++i) differ += a.symbol(a.at_index(i)) != b.symbol(b.at_index(i));
  EXPECT_GT(differ, 800);
}

TEST(RandomShift, SymbolsCoverAlphabetRoughlyUniformly) {
  const BaseSystem base = BaseSystem::random_shift(7, 4, 100'000);
  std::vector<int> counts(4, 0);
  for (std::int64_t i = -100'000; i <= 100'000; ++i) ++counts.at(base.symbol(base.at_index(i)));
  for (int c : counts) EXPECT_NEAR(c / 200'001.0, 0.25, 0.01);
}

TEST(RandomShift, AdvanceShiftsIndex) {
  const BaseSystem base = BaseSystem::random_shift(5, 2, 100);
  const BasePoint t = base.at_index(10);
  EXPECT_EQ(base.advance(t, 5), base.at_index(15));
  EXPECT_EQ(base.advance(base.advance(t, 7), -7), t);
}

TEST(RandomShift, WindowIsEnforced) {
  const BaseSystem base = BaseSystem::random_shift(5, 2, 100);
  EXPECT_NO_THROW(base.symbol(base.at_index(100)));
  EXPECT_THROW(base.symbol(base.at_index(101)), WindowError);
  EXPECT_THROW(base.symbol(base.advance(base.at_index(-100), -1)), WindowError);
}

TEST(RandomShift, RejectsBadAlphabet) {
  EXPECT_THROW(BaseSystem::random_shift(1, 0, 10), std::invalid_argument);
}

TEST(BaseSystem, AccessorsCheckKind) {
  EXPECT_THROW(BaseSystem::rotation().as_random(), std::logic_error);
  EXPECT_THROW(BaseSystem::random_shift(1, 2, 10).as_rotation(), std::logic_error);
}
