#pragma once

// Pullback computation of the upper bounding graph psi+ of the radial
// dynamics, regime classification, and forward-attraction diagnostics.

#include <cstdint>
#include <string_view>
#include <vector>

#include "nahopf/model.hpp"
#include "nahopf/polar.hpp"

namespace nahopf {

inline constexpr std::int64_t kDefaultPullbackDepth = 3000;
inline constexpr int kDefaultGridResolution = 512;
/// Seed of the forward-transported ridge sample. Deliberately different from
/// the seed used by unstable_direction.
inline constexpr double kRidgeSeedAngle = 0.0;

/// Uniform cell-centred grid on the base circle x projective circle. For a
/// random-shift base, row i is the base point with symbol index i.
struct Grid {
  int theta_res = kDefaultGridResolution;
  int alpha_res = kDefaultGridResolution;

  void validate() const;
  double alpha_node(int j) const { return (j + 0.5) / alpha_res; }
  double theta_node(int i) const { return (i + 0.5) / theta_res; }
};

struct PsiField {
  double beta = 0.0;
  std::int64_t depth = 0;
  Grid grid;
  double r_start = 1.0;
  bool rotation_base = true;
  std::vector<BasePoint> rows;
  /// psi+ at the grid nodes, row-major (theta, alpha).
  std::vector<double> values;
  /// Per row: landing angle and radius of a seed transported forward over
  /// `depth` steps. It sits on the attracting projective graph, which grid
  /// nodes miss when the attractor is a segment.
  std::vector<double> ridge_alpha;
  std::vector<double> ridge_value;

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.alpha_res + j];
  }
  int ridge_cell(int i) const;
  /// max(node value, ridge value if the ridge lands in cell j).
  double cell_value(int i, int j) const;
  /// Base angle of row i (rotation) or its symbol index (random shift).
  double row_coordinate(int i) const;
};

struct ClassifyParams {
  double eps_zero = 1e-6;
  double eps_pos = 1e-4;
  double segment_fraction = 0.02;

  void validate() const;
};

enum class Regime { Trivial, Segment, Torus, Indeterminate };
std::string_view to_string(Regime r);

struct FractionStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct RegimeReport {
  Regime regime = Regime::Indeterminate;
  double max_psi = 0.0;
  double min_psi = 0.0;
  /// Fraction of cells per row with cell value > eps_zero.
  FractionStats positive_fraction;
  ClassifyParams params;
};

/// Finite-depth pullback F^depth along the backward g-orbit of (theta, alpha),
/// started from r_top.
double psi_plus_point(const PolarSystem& sys, const BasePoint& theta, ProjAngle alpha,
                      std::int64_t depth);

struct RidgeSample {
  ProjAngle alpha;
  double value = 0.0;
};

/// Transports `seed` at gamma^{-depth} theta forward to theta with radius
/// started at r_top. The result is the depth-d pullback evaluated at the
/// landing angle, which approximates the unstable direction.
RidgeSample unstable_ridge(const PolarSystem& sys, const BasePoint& theta, std::int64_t depth,
                           ProjAngle seed = ProjAngle(kRidgeSeedAngle));

/// `threads == 0` uses the hardware concurrency. Results do not depend on it.
PsiField psi_field(const PolarSystem& sys, const Grid& grid, std::int64_t depth,
                   unsigned threads = 0);

RegimeReport classify(const PsiField& field, const ClassifyParams& params = {});

struct BoundaryCurve {
  double row_coordinate = 0.0;
  /// Full-turn plane angles in [0,1), increasing.
  std::vector<double> plane_alpha;
  std::vector<double> radius;
  std::vector<Vec2> points;
};

/// Boundary curves in the original plane (projective angle doubled). Throws
/// std::logic_error unless the field classifies as Torus.
std::vector<BoundaryCurve> torus_boundary(const PsiField& field,
                                          const ClassifyParams& params = {});

/// Largest jump between neighbouring samples of any closed curve.
double max_adjacent_jump(const std::vector<BoundaryCurve>& curves);

struct ForwardReport {
  std::vector<Vec2> trajectory;          // f^k(v0), k = 0..n
  std::vector<double> norms;             // |f^k(v0)|
  std::vector<double> endpoint_radius;   // psi+ at the attracting direction, k = 0..n
  std::vector<Vec2> endpoint;            // one of the two endpoints, k = 0..n
  std::vector<double> distance;          // distance to {+endpoint, -endpoint}
  std::int64_t burn_in = 0;
  double max_distance_after_burn_in = 0.0;
};

/// Forward orbit of v0 compared with the two-point set +-psi+ v(alpha_u)
/// along gamma^k theta0. The endpoints come from a ridge orbit started
/// `depth` steps before theta0 and run in lockstep. Throws when v0 lies
/// within 1e-6 (projectively) of the stable direction.
ForwardReport two_point_forward(const ModelSystem& sys, const BasePoint& theta0, Vec2 v0,
                                std::int64_t n, std::int64_t burn_in,
                                std::int64_t depth = kDefaultPullbackDepth);

/// (1/n) sum_{i<n} |f^i(v)|.
double cesaro_average(const ModelSystem& sys, const BasePoint& theta, Vec2 v, std::int64_t n);

struct ResidualReport {
  double max_residual = 0.0;
  double grid_spacing = 0.0;
};

/// max over nodes of |F(psi(node)) - psi(g(node))|, the right side bilinearly
/// interpolated on the periodic grid.
ResidualReport invariance_residual(const PsiField& field, const PolarSystem& sys);

}  // namespace nahopf
