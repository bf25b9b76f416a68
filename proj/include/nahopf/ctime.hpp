#pragma once

// Continuous-time models: the planar linear field x' = B(omega_t theta) x in
// projective polar coordinates, with the radial equation made concave by
//   r' = (gamma(omega_t theta, alpha) + beta + eta(r)) r.
// The base flow is omega_t theta = theta + t rho mod 1.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "nahopf/base.hpp"
#include "nahopf/linalg.hpp"

namespace nahopf::ctime {

inline constexpr double kDefaultStep = 1e-3;

struct ZeroField {};
/// (0, -omega; omega, 0).
struct RotationGenerator {
  double omega = 1.0;
};
/// diag(lambda, -lambda).
struct DiagonalField {
  double lambda = 1.0;
};
/// lambda (cos 2 pi theta, sin 2 pi theta; sin 2 pi theta, -cos 2 pi theta)
/// plus the rotation generator with rate omega.
struct ForcedField {
  double lambda = 0.5;
  double omega = 1.0;
};

struct LinearFieldSpec {
  std::variant<ZeroField, RotationGenerator, DiagonalField, ForcedField> field;
  double rho = kGoldenRotation;

  Mat2 at(double theta) const;
};

class EtaSpec {
 public:
  /// eta(r) = -r.
  static EtaSpec negative_identity();
  static EtaSpec custom(std::function<double(double)> eta, std::string name);

  double operator()(double r) const { return fn_(r); }
  const std::string& name() const { return name_; }

 private:
  EtaSpec(std::function<double(double)> f, std::string name) : fn_(std::move(f)), name_(std::move(name)) {}
  std::function<double(double)> fn_;
  std::string name_;
};

struct EtaReport {
  bool zero_at_origin = false;
  bool non_positive = false;
  bool non_increasing = false;
  bool product_concave = false;
  bool unbounded_below = false;

  bool all_pass() const {
    return zero_at_origin && non_positive && non_increasing && product_concave && unbounded_below;
  }
};

/// Sample checks on [0, r_max]; unbounded_below is proxied by eta(r_max) < -c_large.
EtaReport eta_check(const EtaSpec& eta, int samples = 1000, double r_max = 1e3,
                    double c_large = 100.0);

struct FlowParams {
  double beta = 0.0;
  double step = kDefaultStep;
  double horizon = 1.0;

  void validate() const;
};

/// gamma(theta, alpha) = a cos^2 + (b + c) sin cos + d sin^2 at pi*alpha.
double radial_rate(const Mat2& b, double alpha);

double rhs_angular(const LinearFieldSpec& spec, double t, double theta0, double alpha);
double rhs_radial(const LinearFieldSpec& spec, const EtaSpec& eta, double beta, double t,
                  double theta0, double alpha, double r);

struct IntegrationResult {
  /// Reduced mod 1.
  double alpha = 0.0;
  /// Unreduced lift of the angle.
  double alpha_lift = 0.0;
  double r = 0.0;
  /// Steps where a positive r below 1e-30 was clamped to 0.
  int clamp_events = 0;
};

/// Fixed-step classical RK4 from t = 0 to T; the step is shrunk to T/ceil(T/step).
IntegrationResult integrate(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                            double theta0, double alpha0, double r0, double horizon, double step);

struct TimeOneImage {
  double theta = 0.0;
  double alpha = 0.0;
  double r = 0.0;
};

TimeOneImage time_one_map(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                          double theta, double alpha, double r, double step = kDefaultStep);

/// Radial growth factor of the linear flow over [0,1], integrated in log r.
double omega_one(const LinearFieldSpec& spec, double theta, double alpha,
                 double step = kDefaultStep);

/// Richardson estimate log2(|y(h) - y(h/2)| / |y(h/2) - y(h/4)|) on r(T).
double measured_order(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                      double theta0, double alpha0, double r0, double horizon, double step);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct PropertyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Time-one-map property checks on `samples` seeded (theta, alpha) pairs:
/// F(0)=0, F'(0) against e^beta Omega_1, integrator order, monotonicity in
/// r and beta, concavity, skew independence and boundedness.
PropertyReport time_one_checks(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                               int samples = 100, double step = kDefaultStep,
                               std::uint64_t seed = 1);

}  // namespace nahopf::ctime
