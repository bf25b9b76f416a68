#include "nahopf/polar.hpp"

#include <cmath>
#include <stdexcept>

namespace nahopf {

void PolarSystem::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be > 0");
  cocycle.check_compatible(base);
}

FibrePoint g(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha) {
  const Vec2 image = matrix(sys.cocycle, sys.base, theta) * unit_vector(alpha);
  return {sys.base.advance(theta, 1), project(image)};
}

FibrePoint g_inverse(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha) {
  const BasePoint prev = sys.base.advance(theta, -1);
  const Vec2 image = inverse(matrix(sys.cocycle, sys.base, prev)) * unit_vector(alpha);
  return {prev, project(image)};
}

double omega(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha) {
  return norm(matrix(sys.cocycle, sys.base, theta) * unit_vector(alpha));
}

double omega_product(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                     std::int64_t n) {
  if (n < 1) throw std::invalid_argument("omega_product needs n >= 1");
  double log_sum = 0.0;
  FibrePoint p{theta, alpha};
  for (std::int64_t k = 0; k < n; ++k) {
    log_sum += std::log(omega(sys, p.theta, p.alpha));
    p = g(sys, p.theta, p.alpha);
  }
  return std::exp(log_sum);
}

double fibre(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha, double r) {
  if (r < 0.0) throw std::invalid_argument("fibre needs r >= 0");
  return sys.h(sys.beta * r) * omega(sys, theta, alpha);
}

double fibre_derivative(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                        double r) {
  if (r < 0.0) throw std::invalid_argument("fibre_derivative needs r >= 0");
  return sys.beta * sys.h.derivative(sys.beta * r) * omega(sys, theta, alpha);
}

PolarState flow(const PolarSystem& sys, const PolarState& start, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("flow is forward only (n >= 0)");
  if (start.r < 0.0) throw std::invalid_argument("flow needs r >= 0");
  PolarState s = start;
  for (std::int64_t k = 0; k < n; ++k) {
    const Vec2 image = matrix(sys.cocycle, sys.base, s.theta) * unit_vector(s.alpha);
    s.r = sys.h(sys.beta * s.r) * norm(image);
    s.alpha = project(image);
    s.theta = sys.base.advance(s.theta, 1);
  }
  return s;
}

}  // namespace nahopf
