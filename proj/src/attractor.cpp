#include "nahopf/attractor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace nahopf {
namespace {

/// Matrices along the backward base orbit of one row: entry k-1 belongs to
/// gamma^{-k} theta.
struct RowOrbit {
  std::vector<Mat2> forward;
  std::vector<Mat2> inverse;
};

RowOrbit row_orbit(const PolarSystem& sys, const BasePoint& theta, std::int64_t depth) {
  RowOrbit out;
  out.forward.resize(static_cast<std::size_t>(depth));
  out.inverse.resize(static_cast<std::size_t>(depth));
  for (std::int64_t k = 1; k <= depth; ++k) {
    const Mat2 a = matrix(sys.cocycle, sys.base, sys.base.advance(theta, -k));
    out.forward[k - 1] = a;
    out.inverse[k - 1] = inverse(a);
  }
  return out;
}

inline double fast_norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

// Backward projective pass stores Omega along g^{-k}(theta, alpha); the
// forward pass then applies the fibre maps from the far past.
template <class H>
double pullback_kernel(const RowOrbit& orbit, ProjAngle alpha, const H& h, double beta,
                       double r_start, std::vector<double>& omega_scratch) {
  const auto depth = orbit.inverse.size();
  omega_scratch.resize(depth);
  Vec2 v = unit_vector(alpha);
  for (std::size_t k = 0; k < depth; ++k) {
    const Vec2 w = orbit.inverse[k] * v;
    const double nw = fast_norm(w);
    v = (1.0 / nw) * w;
    // |A u| for u = A^{-1} w / |A^{-1} w| with |w| = 1
    omega_scratch[depth - 1 - k] = 1.0 / nw;
  }
  double r = r_start;
  for (std::size_t k = 0; k < depth; ++k) r = h(beta * r) * omega_scratch[k];
  return r;
}

template <class H>
RidgeSample ridge_kernel(const RowOrbit& orbit, ProjAngle seed, const H& h, double beta,
                         double r_start) {
  Vec2 v = unit_vector(seed);
  double r = r_start;
  for (std::size_t k = orbit.forward.size(); k-- > 0;) {
    const Vec2 w = orbit.forward[k] * v;
    const double nw = fast_norm(w);
    v = (1.0 / nw) * w;
    r = h(beta * r) * nw;
  }
  return {project(v), r};
}

void require_depth(std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("pullback depth must be >= 1");
}

double periodic_bilinear(const PsiField& f, double u, double w) {
  const int n = f.grid.theta_res;
  const int m = f.grid.alpha_res;
  const double fu_floor = std::floor(u);
  const double fw_floor = std::floor(w);
  const double fu = u - fu_floor;
  const double fw = w - fw_floor;
  const auto wrap = [](long long i, int size) { return static_cast<int>(((i % size) + size) % size); };
  const int i0 = wrap(static_cast<long long>(fu_floor), n);
  const int i1 = wrap(static_cast<long long>(fu_floor) + 1, n);
  const int j0 = wrap(static_cast<long long>(fw_floor), m);
  const int j1 = wrap(static_cast<long long>(fw_floor) + 1, m);
  return (1 - fu) * (1 - fw) * f.at(i0, j0) + fu * (1 - fw) * f.at(i1, j0) +
         (1 - fu) * fw * f.at(i0, j1) + fu * fw * f.at(i1, j1);
}

}  // namespace

void Grid::validate() const {
  if (theta_res < 2 || alpha_res < 2) throw std::invalid_argument("grid resolutions must be >= 2");
}

int PsiField::ridge_cell(int i) const {
  const int j = static_cast<int>(std::floor(ridge_alpha[i] * grid.alpha_res));
  return std::clamp(j, 0, grid.alpha_res - 1);
}

double PsiField::cell_value(int i, int j) const {
  const double v = at(i, j);
  return j == ridge_cell(i) ? std::max(v, ridge_value[i]) : v;
}

double PsiField::row_coordinate(int i) const {
  return rotation_base ? grid.theta_node(i) : static_cast<double>(rows[i].offset);
}

void ClassifyParams::validate() const {
  if (!(eps_zero > 0.0 && eps_zero <= eps_pos)) {
    throw std::invalid_argument("classify thresholds need 0 < eps_zero <= eps_pos");
  }
  if (!(segment_fraction > 0.0 && segment_fraction < 1.0)) {
    throw std::invalid_argument("segment_fraction must lie in (0, 1)");
  }
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Trivial: return "Trivial";
    case Regime::Segment: return "Segment";
    case Regime::Torus: return "Torus";
    case Regime::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

double psi_plus_point(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                      std::int64_t depth) {
  require_depth(depth);
  sys.validate();
  const RowOrbit orbit = row_orbit(sys, theta, depth);
  std::vector<double> scratch;
  return sys.h.visit([&](const auto& h) {
    return pullback_kernel(orbit, alpha, h, sys.beta, r_top(sys), scratch);
  });
}

RidgeSample unstable_ridge(const PolarSystem& sys, const BasePoint& theta, std::int64_t depth,
                           ProjAngle seed) {
  require_depth(depth);
  sys.validate();
  const RowOrbit orbit = row_orbit(sys, theta, depth);
  return sys.h.visit(
      [&](const auto& h) { return ridge_kernel(orbit, seed, h, sys.beta, r_top(sys)); });
}

PsiField psi_field(const PolarSystem& sys, const Grid& grid, std::int64_t depth, unsigned threads) {
  require_depth(depth);
  grid.validate();
  sys.validate();

  PsiField field;
  field.beta = sys.beta;
  field.depth = depth;
  field.grid = grid;
  field.r_start = r_top(sys);
  field.rotation_base = sys.base.is_rotation();
  field.rows.resize(grid.theta_res);
  for (int i = 0; i < grid.theta_res; ++i) {
    field.rows[i] = field.rotation_base ? sys.base.at_angle(grid.theta_node(i)) : sys.base.at_index(i);
  }
  field.values.assign(static_cast<std::size_t>(grid.theta_res) * grid.alpha_res, 0.0);
  field.ridge_alpha.assign(grid.theta_res, 0.0);
  field.ridge_value.assign(grid.theta_res, 0.0);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.theta_res));

  std::atomic<int> next_row{0};
  const auto worker = [&] {
    std::vector<double> scratch;
    for (int i = next_row++; i < grid.theta_res; i = next_row++) {
      const RowOrbit orbit = row_orbit(sys, field.rows[i], depth);
      sys.h.visit([&](const auto& h) {
        double* row = field.values.data() + static_cast<std::size_t>(i) * grid.alpha_res;
        for (int j = 0; j < grid.alpha_res; ++j) {
          row[j] = pullback_kernel(orbit, ProjAngle(grid.alpha_node(j)), h, sys.beta,
                                   field.r_start, scratch);
        }
        const RidgeSample ridge =
            ridge_kernel(orbit, ProjAngle(kRidgeSeedAngle), h, sys.beta, field.r_start);
        field.ridge_alpha[i] = ridge.alpha.value;
        field.ridge_value[i] = ridge.value;
      });
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return field;
}

RegimeReport classify(const PsiField& field, const ClassifyParams& params) {
  params.validate();
  RegimeReport rep;
  rep.params = params;
  const int n = field.grid.theta_res;
  const int m = field.grid.alpha_res;

  rep.max_psi = -std::numeric_limits<double>::infinity();
  rep.min_psi = std::numeric_limits<double>::infinity();
  rep.positive_fraction.min = 1.0;
  double fraction_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    int positive = 0;
    for (int j = 0; j < m; ++j) {
      const double v = field.cell_value(i, j);
      rep.max_psi = std::max(rep.max_psi, v);
      rep.min_psi = std::min(rep.min_psi, v);
      if (v > params.eps_zero) ++positive;
    }
    const double frac = static_cast<double>(positive) / m;
    fraction_sum += frac;
    rep.positive_fraction.min = std::min(rep.positive_fraction.min, frac);
    rep.positive_fraction.max = std::max(rep.positive_fraction.max, frac);
  }
  rep.positive_fraction.mean = fraction_sum / n;

  if (rep.max_psi < params.eps_zero) {
    rep.regime = Regime::Trivial;
  } else if (rep.min_psi > params.eps_pos) {
    rep.regime = Regime::Torus;
  } else if (rep.positive_fraction.max <= params.segment_fraction && rep.max_psi >= params.eps_pos) {
    rep.regime = Regime::Segment;
  } else {
    rep.regime = Regime::Indeterminate;
  }
  return rep;
}

std::vector<BoundaryCurve> torus_boundary(const PsiField& field, const ClassifyParams& params) {
  const RegimeReport rep = classify(field, params);
  if (rep.regime != Regime::Torus) {
    throw std::logic_error("torus_boundary needs a Torus field, got " +
                           std::string(to_string(rep.regime)));
  }
  const int m = field.grid.alpha_res;
  std::vector<BoundaryCurve> curves(field.grid.theta_res);
  for (int i = 0; i < field.grid.theta_res; ++i) {
    BoundaryCurve& c = curves[i];
    c.row_coordinate = field.row_coordinate(i);
    c.plane_alpha.reserve(2 * m);
    c.radius.reserve(2 * m);
    c.points.reserve(2 * m);
    // the plane angle a and a + 1/2 share the projective angle 2a mod 1
    for (int half = 0; half < 2; ++half) {
      for (int j = 0; j < m; ++j) {
        const double a = 0.5 * (field.grid.alpha_node(j) + half);
        const double r = field.at(i, j);
        const double t = 2.0 * std::numbers::pi * a;
        c.plane_alpha.push_back(a);
        c.radius.push_back(r);
        c.points.push_back({r * std::cos(t), r * std::sin(t)});
      }
    }
  }
  return curves;
}

double max_adjacent_jump(const std::vector<BoundaryCurve>& curves) {
  double out = 0.0;
  for (const auto& c : curves) {
    const std::size_t n = c.radius.size();
    for (std::size_t k = 0; k < n; ++k) {
      out = std::max(out, std::abs(c.radius[(k + 1) % n] - c.radius[k]));
    }
  }
  return out;
}

ForwardReport two_point_forward(const ModelSystem& sys, const BasePoint& theta0, Vec2 v0,
                                std::int64_t n, std::int64_t burn_in, std::int64_t depth) {
  if (n < 0 || burn_in < 0) throw std::invalid_argument("two_point_forward needs n, burn_in >= 0");
  require_depth(depth);
  sys.validate();
  if (norm(v0) > 0.0) {
    const DirectionEstimate stable = stable_direction(sys.cocycle, sys.base, theta0, depth);
    if (projective_distance(project(v0), stable.angle) < 1e-6) {
      throw std::invalid_argument("initial vector lies on the stable direction (within 1e-6)");
    }
  }

  const PolarSystem polar = sys.polar();
  RidgeSample ridge = unstable_ridge(polar, theta0, depth);
  Vec2 ridge_dir = unit_vector(ridge.alpha);
  double ridge_r = ridge.value;

  ForwardReport rep;
  rep.burn_in = burn_in;
  const auto size = static_cast<std::size_t>(n + 1);
  rep.trajectory.reserve(size);
  rep.norms.reserve(size);
  rep.endpoint_radius.reserve(size);
  rep.endpoint.reserve(size);
  rep.distance.reserve(size);

  BasePoint theta = theta0;
  Vec2 v = v0;
  for (std::int64_t k = 0;; ++k) {
    const Vec2 e = ridge_r * ridge_dir;
    const double d = std::min(norm(v - e), norm(v + e));
    rep.trajectory.push_back(v);
    rep.norms.push_back(norm(v));
    rep.endpoint_radius.push_back(ridge_r);
    rep.endpoint.push_back(e);
    rep.distance.push_back(d);
    if (k > burn_in) rep.max_distance_after_burn_in = std::max(rep.max_distance_after_burn_in, d);
    if (k == n) break;

    const Mat2 a = matrix(sys.cocycle, sys.base, theta);
    const Vec2 w = a * ridge_dir;
    const double nw = norm(w);
    ridge_r = sys.h(sys.beta * ridge_r) * nw;
    ridge_dir = (1.0 / nw) * w;
    v = fibre_map(sys, theta, v);
    theta = sys.base.advance(theta, 1);
  }
  return rep;
}

double cesaro_average(const ModelSystem& sys, const BasePoint& theta, Vec2 v, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cesaro_average needs n >= 1");
  double sum = 0.0;
  BasePoint t = theta;
  for (std::int64_t i = 0; i < n; ++i) {
    sum += norm(v);
    v = fibre_map(sys, t, v);
    t = sys.base.advance(t, 1);
  }
  return sum / static_cast<double>(n);
}

ResidualReport invariance_residual(const PsiField& field, const PolarSystem& sys) {
  if (field.beta != sys.beta) throw std::invalid_argument("field beta differs from the system's");
  if (field.rotation_base != sys.base.is_rotation()) {
    throw std::invalid_argument("field base type differs from the system's");
  }
  const int n = field.grid.theta_res;
  const int m = field.grid.alpha_res;
  ResidualReport rep;
  rep.grid_spacing = std::max(1.0 / n, 1.0 / m);
  // a random-shift row i maps to row i+1; the last row has no successor
  const int rows = field.rotation_base ? n : n - 1;
  for (int i = 0; i < rows; ++i) {
    const Mat2 a = matrix(sys.cocycle, sys.base, field.rows[i]);
    for (int j = 0; j < m; ++j) {
      const Vec2 image = a * unit_vector(ProjAngle(field.grid.alpha_node(j)));
      const double lhs = sys.h(sys.beta * field.at(i, j)) * norm(image);
      const double u = field.rotation_base
                           ? sys.base.angle(sys.base.advance(field.rows[i], 1)) * n - 0.5
                           : static_cast<double>(i + 1);
      const double w = project(image).value * m - 0.5;
      rep.max_residual = std::max(rep.max_residual, std::abs(lhs - periodic_bilinear(field, u, w)));
    }
  }
  return rep;
}

}  // namespace nahopf
