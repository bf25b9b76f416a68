#include "nahopf/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nahopf {

ModelSystem golden_arctan_system(double beta) {
  return {BaseSystem::rotation(kGoldenRotation), CocycleSpec::scaled_rotation(0.5),
          HFunction::arctan(kGoldenArctanKappa), beta};
}

Vec2 fibre_map(const ModelSystem& sys, const BasePoint& theta, Vec2 v) {
  const double nv = norm(v);
  if (nv == 0.0) return {};
  return (sys.h(sys.beta * nv) / nv) * (matrix(sys.cocycle, sys.base, theta) * v);
}

ModelState iterate(const ModelSystem& sys, const BasePoint& theta, Vec2 v, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("iterate needs n >= 0");
  ModelState s{theta, v};
  for (std::int64_t k = 0; k < n; ++k) {
    s.v = fibre_map(sys, s.theta, s.v);
    s.theta = sys.base.advance(s.theta, 1);
  }
  return s;
}

double r_top(const CocycleSpec& cocycle, const HFunction& h) {
  return std::max(1.0, h.sup() * cocycle.max_norm());
}

CriticalBetas critical_betas(const HFunction& h, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("critical_betas needs lambda >= 0");
  const double slope = h.slope_at_zero();
  if (!(slope > 0.0)) throw std::invalid_argument("critical_betas needs h'(0) > 0");
  return {std::exp(-lambda) / slope, std::exp(lambda) / slope};
}

D2Report d2_check(const HFunction& h, int samples, double x_max) {
  if (samples < 3) throw std::invalid_argument("d2_check needs >= 3 samples");
  D2Report rep;
  const double dx = x_max / (samples - 1);
  std::vector<double> y(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) y[i] = h(i * dx);

  rep.zero_at_origin = std::abs(y[0]) <= 1e-15;
  rep.increasing = true;
  for (int i = 1; i < samples; ++i) rep.increasing = rep.increasing && y[i] > y[i - 1];

  // second differences must be non-positive up to rounding
  rep.max_second_difference = -INFINITY;
  for (int i = 1; i + 1 < samples; ++i) {
    rep.max_second_difference = std::max(rep.max_second_difference, y[i + 1] - 2.0 * y[i] + y[i - 1]);
  }
  const double scale = std::max(1.0, std::abs(y.back()));
  rep.concave = rep.max_second_difference <= 1e-13 * scale;

  rep.bounded = std::all_of(y.begin(), y.end(), [&](double v) { return v <= h.sup(); });

  // one-sided second-order difference at 0
  const double d = 1e-4;
  rep.measured_slope = (-3.0 * h(0.0) + 4.0 * h(d) - h(2.0 * d)) / (2.0 * d);
  rep.slope_matches = std::abs(rep.measured_slope - h.slope_at_zero()) <= 1e-6 &&
                      std::abs(h.derivative(0.0) - h.slope_at_zero()) <= 1e-6;
  return rep;
}

}  // namespace nahopf
