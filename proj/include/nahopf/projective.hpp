#pragma once

// Projective angle coordinate on lines through the origin.
//
// A line is parametrised by alpha in [0,1) via v(alpha) = (cos pi*alpha,
// sin pi*alpha), so alpha has period 1 and v(alpha + 1) = -v(alpha). The
// original plane uses the full-turn angle a with (cos 2*pi*a, sin 2*pi*a);
// the two are related by alpha = 2a mod 1, and every conversion goes through
// projective_from_plane / plane_from_projective below.

#include "nahopf/linalg.hpp"

namespace nahopf {

struct ProjAngle {
  double value = 0.0;

  ProjAngle() = default;
  /// Reduces mod 1.
  explicit ProjAngle(double alpha);

  friend bool operator==(const ProjAngle&, const ProjAngle&) = default;
};

/// Unit vector v(alpha) = (cos pi*alpha, sin pi*alpha).
Vec2 unit_vector(ProjAngle alpha);

/// p(v) = arctan(v2/v1)/pi mod 1, quadrant aware. Throws on the zero vector.
ProjAngle project(Vec2 v);

/// Distance on R/Z.
double projective_distance(ProjAngle a, ProjAngle b);

/// Full-turn plane angle a -> projective angle 2a mod 1.
ProjAngle projective_from_plane(double plane_angle);

/// The two plane angles (in [0,1)) whose direction lies on the line alpha.
struct PlaneAngles {
  double first;
  double second;
};
PlaneAngles plane_from_projective(ProjAngle alpha);

}  // namespace nahopf
