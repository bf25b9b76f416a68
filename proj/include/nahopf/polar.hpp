#pragma once

// Double skew product in projective polar coordinates:
//   F(theta, alpha, r) = (g(theta, alpha), h(beta r) * Omega(theta, alpha)),
// where g is the projective action of the cocycle and
// Omega(theta, alpha) = ||A(theta) v(alpha)||.

#include <cstdint>

#include "nahopf/base.hpp"
#include "nahopf/cocycle.hpp"
#include "nahopf/hfunction.hpp"
#include "nahopf/projective.hpp"

namespace nahopf {

struct PolarSystem {
  BaseSystem base;
  CocycleSpec cocycle;
  HFunction h;
  double beta = 1.0;

  /// Throws std::invalid_argument when beta <= 0 or the cocycle does not fit the base.
  void validate() const;
};

struct PolarState {
  BasePoint theta;
  ProjAngle alpha;
  double r = 0.0;
};

struct FibrePoint {
  BasePoint theta;
  ProjAngle alpha;
};

FibrePoint g(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha);
FibrePoint g_inverse(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha);

double omega(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha);

/// prod_{k<n} Omega(g^k(theta, alpha)), accumulated in log space.
double omega_product(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                     std::int64_t n);

double fibre(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha, double r);
double fibre_derivative(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                        double r);

/// n-fold forward iterate of F. Radial dynamics are forward only.
PolarState flow(const PolarSystem& sys, const PolarState& start, std::int64_t n);

}  // namespace nahopf
