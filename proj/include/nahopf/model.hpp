#pragma once

// The planar skew product (theta, v) -> (gamma theta, h(beta |v|) A(theta) v/|v|).

#include <cstdint>

#include "nahopf/base.hpp"
#include "nahopf/cocycle.hpp"
#include "nahopf/hfunction.hpp"
#include "nahopf/linalg.hpp"
#include "nahopf/polar.hpp"

namespace nahopf {

struct ModelSystem {
  BaseSystem base;
  CocycleSpec cocycle;
  HFunction h;
  double beta = 1.0;

  void validate() const { polar().validate(); }
  PolarSystem polar() const { return {base, cocycle, h, beta}; }
};

/// kappa = 1/(3 sqrt 2): the arctan scale that puts the critical parameters
/// of the golden-mean example at 4 and 4.5.
inline const double kGoldenArctanKappa = 1.0 / (3.0 * std::sqrt(2.0));

/// Golden-mean rotation, c = 1/2 example cocycle, h = kappa * arctan.
ModelSystem golden_arctan_system(double beta);

Vec2 fibre_map(const ModelSystem& sys, const BasePoint& theta, Vec2 v);

struct ModelState {
  BasePoint theta;
  Vec2 v;
};
ModelState iterate(const ModelSystem& sys, const BasePoint& theta, Vec2 v, std::int64_t n);

/// Invariant radial bound: max(1, sup_h * max ||A||).
double r_top(const CocycleSpec& cocycle, const HFunction& h);
inline double r_top(const ModelSystem& sys) { return r_top(sys.cocycle, sys.h); }
inline double r_top(const PolarSystem& sys) { return r_top(sys.cocycle, sys.h); }

struct CriticalBetas {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// beta_{1,2} = e^{-+lambda} / h'(0).
CriticalBetas critical_betas(const HFunction& h, double lambda);

struct D2Report {
  bool zero_at_origin = false;
  bool increasing = false;
  bool concave = false;
  bool bounded = false;
  bool slope_matches = false;
  double measured_slope = 0.0;
  double max_second_difference = 0.0;

  bool all_pass() const {
    return zero_at_origin && increasing && concave && bounded && slope_matches;
  }
};

/// Sample-based check of h(0)=0, monotonicity, concavity, the declared
/// bound and the declared slope at 0 on a uniform grid over [0, x_max].
D2Report d2_check(const HFunction& h, int samples, double x_max = 20.0);

}  // namespace nahopf
