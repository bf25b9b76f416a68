#include "nahopf/base.hpp"

#include <cmath>
#include <random>
#include <string>

namespace nahopf {

double wrap_unit(double x) {
  double r = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1
  if (r >= 1.0) r = 0.0;
  return r;
}

double rotate_angle(double anchor, std::int64_t k, double rho) {
  const double kd = static_cast<double>(k);
  const double p = kd * rho;
  const double err = std::fma(kd, rho, -p);
  const double frac = p - std::floor(p);
  return wrap_unit(anchor + (frac + err));
}

BaseSystem BaseSystem::rotation(double rho) {
  if (!std::isfinite(rho)) throw std::invalid_argument("rotation number must be finite");
  return BaseSystem(CircleRotation{rho});
}

BaseSystem BaseSystem::random_shift(std::uint64_t seed, std::uint32_t alphabet_size,
                                    std::int64_t window) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet_size must be >= 1");
  if (window < 0) throw std::invalid_argument("window must be >= 0");
  auto symbols = std::make_shared<std::vector<std::uint32_t>>(
      static_cast<std::size_t>(2 * window + 1));
  std::mt19937_64 rng(seed);
  for (auto& s : *symbols) {
    // multiply-shift reduction: portable, unlike uniform_int_distribution
    s = static_cast<std::uint32_t>(((rng() >> 32) * alphabet_size) >> 32);
  }
  return BaseSystem(RandomShift{seed, window, alphabet_size, std::move(symbols)});
}

const CircleRotation& BaseSystem::as_rotation() const {
  if (const auto* r = std::get_if<CircleRotation>(&variant_)) return *r;
  throw std::logic_error("base system is not a circle rotation");
}

const RandomShift& BaseSystem::as_random() const {
  if (const auto* r = std::get_if<RandomShift>(&variant_)) return *r;
  throw std::logic_error("base system is not a random shift");
}

BasePoint BaseSystem::at_angle(double angle) const {
  as_rotation();
  return {wrap_unit(angle), 0};
}

BasePoint BaseSystem::at_index(std::int64_t index) const {
  as_random();
  check_window(index);
  return {0.0, index};
}

void BaseSystem::check_window(std::int64_t index) const {
  const auto& rs = as_random();
  if (index < -rs.window || index > rs.window) {
    throw WindowError("symbol index " + std::to_string(index) + " outside window [-" +
                      std::to_string(rs.window) + ", " + std::to_string(rs.window) + "]");
  }
}

BasePoint BaseSystem::advance(const BasePoint& theta, std::int64_t k) const {
  BasePoint out{theta.anchor, theta.offset + k};
  if (!is_rotation()) check_window(out.offset);
  return out;
}

std::vector<BasePoint> BaseSystem::orbit(const BasePoint& theta0, std::int64_t n_back,
                                         std::int64_t n_fwd) const {
  if (n_back < 0 || n_fwd < 0) throw std::invalid_argument("orbit lengths must be >= 0");
  std::vector<BasePoint> out;
  out.reserve(static_cast<std::size_t>(n_back + n_fwd + 1));
  for (std::int64_t k = -n_back; k <= n_fwd; ++k) out.push_back(advance(theta0, k));
  return out;
}

double BaseSystem::angle(const BasePoint& theta) const {
  return rotate_angle(theta.anchor, theta.offset, as_rotation().rho);
}

std::uint32_t BaseSystem::symbol(const BasePoint& theta) const {
  const auto& rs = as_random();
  check_window(theta.offset);
  return (*rs.symbols)[static_cast<std::size_t>(theta.offset + rs.window)];
}

}  // namespace nahopf
