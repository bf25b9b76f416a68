#pragma once

#include <algorithm>
#include <cmath>

namespace nahopf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
  friend constexpr Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
  friend constexpr Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Row-major 2x2 matrix (a b; c d).
struct Mat2 {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static constexpr Mat2 identity() { return {}; }
  static constexpr Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr double trace() const { return a + d; }

  friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend constexpr Mat2 operator*(double s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Counter-clockwise rotation by `angle` radians.
inline Mat2 rotation_matrix(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

inline Mat2 inverse(const Mat2& m) {
  const double inv_det = 1.0 / m.det();
  return {m.d * inv_det, -m.b * inv_det, -m.c * inv_det, m.a * inv_det};
}

inline double max_abs_entry(const Mat2& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

/// Spectral norm: square root of the largest eigenvalue of M^T M.
inline double operator_norm(const Mat2& m) {
  const double p = m.a * m.a + m.c * m.c;
  const double q = m.a * m.b + m.c * m.d;
  const double s = m.b * m.b + m.d * m.d;
  const double half_tr = 0.5 * (p + s);
  const double disc = std::hypot(0.5 * (p - s), q);
  return std::sqrt(half_tr + disc);
}

}  // namespace nahopf
