#include "nahopf/ctime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nahopf/errors.hpp"
#include "nahopf/projective.hpp"

namespace nahopf::ctime {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClampBelow = 1e-30;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double angular_rate(const Mat2& b, double alpha) {
  const double cs = std::cos(kPi * alpha);
  const double sn = std::sin(kPi * alpha);
  return (b.c * cs * cs + (b.d - b.a) * cs * sn - b.b * sn * sn) / kPi;
}

double base_angle(const LinearFieldSpec& spec, double theta0, double t) {
  return wrap_unit(theta0 + t * spec.rho);
}

struct State {
  double alpha;
  double y;  // r, or log r for the linear growth factor
};

// One classical fourth-order step of s' = f(t, s).
template <class F>
State rk4_step(const F& f, double t, State s, double h) {
  const State k1 = f(t, s);
  const State k2 = f(t + 0.5 * h, {s.alpha + 0.5 * h * k1.alpha, s.y + 0.5 * h * k1.y});
  const State k3 = f(t + 0.5 * h, {s.alpha + 0.5 * h * k2.alpha, s.y + 0.5 * h * k2.y});
  const State k4 = f(t + h, {s.alpha + h * k3.alpha, s.y + h * k3.y});
  return {s.alpha + h / 6.0 * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha),
          s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
}

std::int64_t step_count(double horizon, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("integration step must be > 0");
  if (horizon < 0.0) throw std::invalid_argument("integration horizon must be >= 0");
  return static_cast<std::int64_t>(std::ceil(horizon / step - 1e-9));
}

}  // namespace

Mat2 LinearFieldSpec::at(double theta) const {
  return std::visit(
      Overloaded{
          [](const ZeroField&) { return Mat2{0.0, 0.0, 0.0, 0.0}; },
          [](const RotationGenerator& r) { return Mat2{0.0, -r.omega, r.omega, 0.0}; },
          [](const DiagonalField& d) { return Mat2{d.lambda, 0.0, 0.0, -d.lambda}; },
          [theta](const ForcedField& f) {
            const double cs = std::cos(2.0 * kPi * theta);
            const double sn = std::sin(2.0 * kPi * theta);
            return Mat2{f.lambda * cs, f.lambda * sn - f.omega, f.lambda * sn + f.omega,
                        -f.lambda * cs};
          },
      },
      field);
}

EtaSpec EtaSpec::negative_identity() {
  return EtaSpec([](double r) { return -r; }, "-r");
}

EtaSpec EtaSpec::custom(std::function<double(double)> eta, std::string name) {
  if (!eta) throw std::invalid_argument("eta function is empty");
  return EtaSpec(std::move(eta), std::move(name));
}

EtaReport eta_check(const EtaSpec& eta, int samples, double r_max, double c_large) {
  if (samples < 3) throw std::invalid_argument("eta_check needs >= 3 samples");
  EtaReport rep;
  const double dr = r_max / (samples - 1);
  std::vector<double> e(samples);
  std::vector<double> er(samples);
  for (int i = 0; i < samples; ++i) {
    e[i] = eta(i * dr);
    er[i] = e[i] * i * dr;
  }
  rep.zero_at_origin = e[0] == 0.0;
  rep.non_positive = std::all_of(e.begin(), e.end(), [](double v) { return v <= 0.0; });
  rep.non_increasing = true;
  rep.product_concave = true;
  for (int i = 1; i < samples; ++i) rep.non_increasing = rep.non_increasing && e[i] <= e[i - 1];
  for (int i = 1; i + 1 < samples; ++i) {
    const double scale = std::max(1.0, std::abs(er[i]));
    rep.product_concave = rep.product_concave && er[i + 1] - 2.0 * er[i] + er[i - 1] <= 1e-12 * scale;
  }
  rep.unbounded_below = e.back() < -c_large;
  return rep;
}

void FlowParams::validate() const {
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  if (!(step > 0.0 && step <= 1e-2)) throw std::invalid_argument("step must lie in (0, 1e-2]");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be > 0");
}

double radial_rate(const Mat2& b, double alpha) {
  const double cs = std::cos(kPi * alpha);
  const double sn = std::sin(kPi * alpha);
  return b.a * cs * cs + (b.b + b.c) * sn * cs + b.d * sn * sn;
}

double rhs_angular(const LinearFieldSpec& spec, double t, double theta0, double alpha) {
  return angular_rate(spec.at(base_angle(spec, theta0, t)), alpha);
}

double rhs_radial(const LinearFieldSpec& spec, const EtaSpec& eta, double beta, double t,
                  double theta0, double alpha, double r) {
  if (r < 0.0) throw std::invalid_argument("rhs_radial needs r >= 0");
  return (radial_rate(spec.at(base_angle(spec, theta0, t)), alpha) + beta + eta(r)) * r;
}

IntegrationResult integrate(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                            double theta0, double alpha0, double r0, double horizon, double step) {
  if (r0 < 0.0) throw std::invalid_argument("integrate needs r0 >= 0");
  const std::int64_t n = step_count(horizon, step);
  IntegrationResult out;
  State s{alpha0, r0};
  if (n > 0) {
    const double h = horizon / static_cast<double>(n);
    const auto f = [&](double t, State x) {
      const Mat2 b = spec.at(base_angle(spec, theta0, t));
      return State{angular_rate(b, x.alpha), (radial_rate(b, x.alpha) + beta + eta(x.y)) * x.y};
    };
    for (std::int64_t k = 0; k < n; ++k) {
      s = rk4_step(f, static_cast<double>(k) * h, s, h);
      if (!std::isfinite(s.alpha) || !std::isfinite(s.y)) {
        throw NumericError("integration produced a non-finite value; reduce the step");
      }
      if (s.y < kClampBelow && s.y != 0.0) {
        s.y = 0.0;
        ++out.clamp_events;
      }
    }
  }
  out.alpha_lift = s.alpha;
  out.alpha = wrap_unit(s.alpha);
  out.r = s.y;
  return out;
}

TimeOneImage time_one_map(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                          double theta, double alpha, double r, double step) {
  const IntegrationResult res = integrate(spec, eta, beta, theta, alpha, r, 1.0, step);
  return {base_angle(spec, theta, 1.0), res.alpha, res.r};
}

double omega_one(const LinearFieldSpec& spec, double theta, double alpha, double step) {
  const std::int64_t n = step_count(1.0, step);
  const double h = 1.0 / static_cast<double>(n);
  const auto f = [&](double t, State x) {
    const Mat2 b = spec.at(base_angle(spec, theta, t));
    return State{angular_rate(b, x.alpha), radial_rate(b, x.alpha)};
  };
  State s{alpha, 0.0};
  for (std::int64_t k = 0; k < n; ++k) s = rk4_step(f, static_cast<double>(k) * h, s, h);
  if (!std::isfinite(s.y)) throw NumericError("growth factor integration produced a non-finite value");
  return std::exp(s.y);
}

double measured_order(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                      double theta0, double alpha0, double r0, double horizon, double step) {
  const double y1 = integrate(spec, eta, beta, theta0, alpha0, r0, horizon, step).r;
  const double y2 = integrate(spec, eta, beta, theta0, alpha0, r0, horizon, step / 2).r;
  const double y4 = integrate(spec, eta, beta, theta0, alpha0, r0, horizon, step / 4).r;
  return std::log2(std::abs(y1 - y2) / std::abs(y2 - y4));
}

bool PropertyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

PropertyReport time_one_checks(const LinearFieldSpec& spec, const EtaSpec& eta, double beta,
                               int samples, double step, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("time_one_checks needs >= 1 sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::vector<double> radii{0.05, 0.2, 0.5, 1.0, 2.0};
  constexpr double kDelta = 1e-8;
  constexpr double kBetaStep = 0.1;

  double zero_image = 0.0;
  double derivative_error = 0.0;
  double min_increment = INFINITY;
  double min_beta_increment = INFINITY;
  double max_second_difference = -INFINITY;
  double skew_gap = 0.0;
  double large_r_image = 0.0;
  double gamma_bound = 0.0;

  for (int s = 0; s < samples; ++s) {
    const double theta = unit(rng);
    const double alpha = unit(rng);

    zero_image = std::max(zero_image, std::abs(time_one_map(spec, eta, beta, theta, alpha, 0.0, step).r));

    const double slope = time_one_map(spec, eta, beta, theta, alpha, kDelta, step).r / kDelta;
    const double predicted = std::exp(beta) * omega_one(spec, theta, alpha, step);
    derivative_error = std::max(derivative_error, std::abs(slope - predicted) / predicted);

    std::vector<double> image;
    for (double r : radii) {
      const TimeOneImage im = time_one_map(spec, eta, beta, theta, alpha, r, step);
      image.push_back(im.r);
      const double shifted = time_one_map(spec, eta, beta + kBetaStep, theta, alpha, r, step).r;
      min_beta_increment = std::min(min_beta_increment, shifted - im.r);
      skew_gap = std::max(skew_gap,
                          projective_distance(ProjAngle(im.alpha),
                                              ProjAngle(time_one_map(spec, eta, beta, theta, alpha,
                                                                     radii.front(), step).alpha)));
    }
    for (std::size_t k = 1; k < image.size(); ++k) min_increment = std::min(min_increment, image[k] - image[k - 1]);

    // concavity on an equispaced r grid
    const double h = 0.25;
    double prev2 = 0.0;
    double prev1 = time_one_map(spec, eta, beta, theta, alpha, h, step).r;
    for (int k = 2; k <= 8; ++k) {
      const double cur = time_one_map(spec, eta, beta, theta, alpha, k * h, step).r;
      max_second_difference = std::max(max_second_difference, cur - 2.0 * prev1 + prev2);
      prev2 = prev1;
      prev1 = cur;
    }

    for (double r : {10.0, 50.0, 100.0}) {
      large_r_image = std::max(large_r_image, time_one_map(spec, eta, beta, theta, alpha, r, step).r);
    }
    for (double t = 0.0; t <= 1.0; t += 0.125) {
      const Mat2 b = spec.at(base_angle(spec, theta, t));
      gamma_bound = std::max(gamma_bound, operator_norm(b));
    }
  }

  PropertyReport rep;
  rep.checks.push_back({"time-one fibre map fixes 0", zero_image, 0.0, zero_image == 0.0});
  rep.checks.push_back({"F'(0) vs e^beta * Omega_1 (max relative error)", derivative_error, 1e-4,
                        derivative_error <= 1e-4});
  const double order = measured_order({RotationGenerator{1.0}, spec.rho}, EtaSpec::negative_identity(),
                                      1.0, 0.0, 0.3, 0.1, 1.0, 0.05);
  rep.checks.push_back({"RK4 measured order (rotation generator)", order, 4.0,
                        order >= 3.7 && order <= 4.3});
  rep.checks.push_back({"strictly increasing in r (min increment)", min_increment, 0.0, min_increment > 0.0});
  rep.checks.push_back({"strictly increasing in beta (min increment)", min_beta_increment, 0.0,
                        min_beta_increment > 0.0});
  rep.checks.push_back({"concave in r (max second difference)", max_second_difference, 0.0,
                        max_second_difference < 0.0});
  rep.checks.push_back({"angle independent of r", skew_gap, 1e-12, skew_gap <= 1e-12});
  // |r'| <= (|B| + beta + eta(r)) r keeps the time-one image below |B| + beta + 1
  const double bound = gamma_bound + std::max(beta, 0.0) + 1.0;
  rep.checks.push_back({"bounded image for r in [10, 100]", large_r_image, bound, large_r_image <= bound});
  return rep;
}

}  // namespace nahopf::ctime
