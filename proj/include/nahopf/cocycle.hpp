#pragma once

// SL(2,R)-valued cocycles over a BaseSystem.

#include <cstdint>
#include <variant>
#include <vector>

#include "nahopf/base.hpp"
#include "nahopf/linalg.hpp"
#include "nahopf/projective.hpp"

namespace nahopf {

inline constexpr double kDetTolerance = 1e-12;
/// Seed angle for projective power iteration.
inline constexpr double kGenericSeedAngle = 0.123456;

/// A(theta) = diag(c^-1/2, c^1/2) * (cos 2 pi theta, sin 2 pi theta; -sin, cos).
struct ScaledRotationCocycle {
  double c = 0.5;
};

/// Constant counter-clockwise rotation by `angle` radians.
struct ConstantRotationCocycle {
  double angle = 0.0;
};

struct ConstantMatrixCocycle {
  Mat2 matrix;
};

/// One matrix per symbol of a random shift.
struct MatrixListCocycle {
  std::vector<Mat2> matrices;
};

class CocycleSpec {
 public:
  using Variant = std::variant<ScaledRotationCocycle, ConstantRotationCocycle, ConstantMatrixCocycle,
                               MatrixListCocycle>;

  static CocycleSpec scaled_rotation(double c);
  static CocycleSpec rotation(double angle);
  static CocycleSpec constant(const Mat2& m);
  static CocycleSpec matrix_list(std::vector<Mat2> matrices);

  const Variant& variant() const { return variant_; }

  /// max over theta of the operator norm of A(theta).
  double max_norm() const;

  /// Throws if the spec cannot be evaluated over `base`.
  void check_compatible(const BaseSystem& base) const;

 private:
  explicit CocycleSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// A product represented as exp(log_scale) * normalized.
struct LogProduct {
  Mat2 normalized;
  double log_scale = 0.0;

  Mat2 value() const;
};

Mat2 matrix(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta);

/// A_n(theta) = A(gamma^{n-1} theta) ... A(theta) for n >= 0; for n < 0 the
/// inverse cocycle A(gamma^n theta)^{-1} ... A(gamma^{-1} theta)^{-1}.
LogProduct product(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta,
                   std::int64_t n);

/// (1/|n|) log ||A_n(theta0)||. Negative n uses the inverse cocycle.
double lyapunov_max(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta0,
                    std::int64_t n);

struct DirectionEstimate {
  ProjAngle angle;
  /// Growth rate seen along the iteration.
  double exponent_estimate = 0.0;
  /// False when |exponent_estimate| < 3/sqrt(depth); the cocycle may be
  /// elliptic and the direction meaningless.
  bool reliable = false;
};

/// Forward projective image at theta of the seed angle placed at gamma^{-depth} theta.
DirectionEstimate unstable_direction(const CocycleSpec& spec, const BaseSystem& base,
                                     const BasePoint& theta, std::int64_t depth);

/// Backward projective image at theta of the seed angle placed at gamma^{depth} theta.
DirectionEstimate stable_direction(const CocycleSpec& spec, const BaseSystem& base,
                                   const BasePoint& theta, std::int64_t depth);

}  // namespace nahopf
