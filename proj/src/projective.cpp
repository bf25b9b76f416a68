#include "nahopf/projective.hpp"

#include <numbers>
#include <stdexcept>

#include "nahopf/base.hpp"

namespace nahopf {

ProjAngle::ProjAngle(double alpha) : value(wrap_unit(alpha)) {}

Vec2 unit_vector(ProjAngle alpha) {
  const double t = std::numbers::pi * alpha.value;
  return {std::cos(t), std::sin(t)};
}

ProjAngle project(Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0) throw std::invalid_argument("cannot project the zero vector");
  return ProjAngle(std::atan2(v.y, v.x) / std::numbers::pi);
}

double projective_distance(ProjAngle a, ProjAngle b) {
  const double d = std::abs(a.value - b.value);
  return std::min(d, 1.0 - d);
}

ProjAngle projective_from_plane(double plane_angle) { return ProjAngle(2.0 * plane_angle); }

PlaneAngles plane_from_projective(ProjAngle alpha) {
  return {0.5 * alpha.value, 0.5 * alpha.value + 0.5};
}

}  // namespace nahopf
