#include "nahopf/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nahopf {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_sl2(const Mat2& m, const char* what) {
  if (!(std::abs(m.det() - 1.0) <= kDetTolerance)) {
    throw std::invalid_argument(std::string(what) + ": determinant " + std::to_string(m.det()) +
                                " is not 1 within 1e-12");
  }
}

}  // namespace

Mat2 LogProduct::value() const { return std::exp(log_scale) * normalized; }

CocycleSpec CocycleSpec::scaled_rotation(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("scaled rotation cocycle needs c > 0");
  return CocycleSpec(ScaledRotationCocycle{c});
}

CocycleSpec CocycleSpec::rotation(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  return CocycleSpec(ConstantRotationCocycle{angle});
}

CocycleSpec CocycleSpec::constant(const Mat2& m) {
  require_sl2(m, "constant cocycle");
  return CocycleSpec(ConstantMatrixCocycle{m});
}

CocycleSpec CocycleSpec::matrix_list(std::vector<Mat2> matrices) {
  if (matrices.empty()) throw std::invalid_argument("matrix list cocycle needs >= 1 matrix");
  for (const auto& m : matrices) require_sl2(m, "matrix list cocycle");
  return CocycleSpec(MatrixListCocycle{std::move(matrices)});
}

double CocycleSpec::max_norm() const {
  return std::visit(
      Overloaded{
          [](const ScaledRotationCocycle& e) { return std::max(1.0 / std::sqrt(e.c), std::sqrt(e.c)); },
          [](const ConstantRotationCocycle&) { return 1.0; },
          [](const ConstantMatrixCocycle& m) { return operator_norm(m.matrix); },
          [](const MatrixListCocycle& l) {
            double out = 0.0;
            for (const auto& m : l.matrices) out = std::max(out, operator_norm(m));
            return out;
          },
      },
      variant_);
}

void CocycleSpec::check_compatible(const BaseSystem& base) const {
  if (std::holds_alternative<MatrixListCocycle>(variant_)) {
    if (base.is_rotation()) throw std::invalid_argument("matrix list cocycle needs a random-shift base");
    const auto n = std::get<MatrixListCocycle>(variant_).matrices.size();
    if (n != base.as_random().alphabet_size) {
      throw std::invalid_argument("matrix list length " + std::to_string(n) +
                                  " differs from alphabet size " +
                                  std::to_string(base.as_random().alphabet_size));
    }
  }
  if (std::holds_alternative<ScaledRotationCocycle>(variant_) && !base.is_rotation()) {
    throw std::invalid_argument("scaled rotation cocycle needs a circle-rotation base");
  }
}

Mat2 matrix(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta) {
  return std::visit(
      Overloaded{
          [&](const ScaledRotationCocycle& e) {
            const double t = 2.0 * std::numbers::pi * base.angle(theta);
            const double cs = std::cos(t);
            const double sn = std::sin(t);
            const double p = 1.0 / std::sqrt(e.c);
            const double q = std::sqrt(e.c);
            return Mat2{p * cs, p * sn, -q * sn, q * cs};
          },
          [](const ConstantRotationCocycle& r) { return rotation_matrix(r.angle); },
          [](const ConstantMatrixCocycle& m) { return m.matrix; },
          [&](const MatrixListCocycle& l) {
            if (base.is_rotation()) throw std::invalid_argument("matrix list cocycle at a rotation point");
            return l.matrices.at(base.symbol(theta));
          },
      },
      spec.variant());
}

LogProduct product(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta,
                   std::int64_t n) {
  LogProduct out;
  const auto step = [&](const Mat2& m) {
    out.normalized = m * out.normalized;
    const double s = max_abs_entry(out.normalized);
    out.normalized = (1.0 / s) * out.normalized;
    out.log_scale += std::log(s);
  };
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) step(matrix(spec, base, base.advance(theta, k)));
  } else {
    for (std::int64_t k = 1; k <= -n; ++k) step(inverse(matrix(spec, base, base.advance(theta, -k))));
  }
  return out;
}

double lyapunov_max(const CocycleSpec& spec, const BaseSystem& base, const BasePoint& theta0,
                    std::int64_t n) {
  if (n == 0) throw std::invalid_argument("lyapunov_max needs n != 0");
  const LogProduct p = product(spec, base, theta0, n);
  return (p.log_scale + std::log(operator_norm(p.normalized))) / static_cast<double>(std::abs(n));
}

namespace {

DirectionEstimate finish(Vec2 v, double log_growth, std::int64_t depth) {
  DirectionEstimate out;
  out.angle = project(v);
  out.exponent_estimate = log_growth / static_cast<double>(depth);
  out.reliable = std::abs(out.exponent_estimate) >= 3.0 / std::sqrt(static_cast<double>(depth));
  return out;
}

}  // namespace

DirectionEstimate unstable_direction(const CocycleSpec& spec, const BaseSystem& base,
                                     const BasePoint& theta, std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("unstable_direction needs depth >= 1");
  Vec2 v = unit_vector(ProjAngle(kGenericSeedAngle));
  double growth = 0.0;
  for (std::int64_t k = depth; k >= 1; --k) {
    v = matrix(spec, base, base.advance(theta, -k)) * v;
    const double nv = norm(v);
    growth += std::log(nv);
    v = (1.0 / nv) * v;
  }
  return finish(v, growth, depth);
}

DirectionEstimate stable_direction(const CocycleSpec& spec, const BaseSystem& base,
                                   const BasePoint& theta, std::int64_t depth) {
  if (depth < 1) throw std::invalid_argument("stable_direction needs depth >= 1");
  Vec2 v = unit_vector(ProjAngle(kGenericSeedAngle));
  double growth = 0.0;
  for (std::int64_t k = depth; k >= 1; --k) {
    v = inverse(matrix(spec, base, base.advance(theta, k - 1))) * v;
    const double nv = norm(v);
    growth += std::log(nv);
    v = (1.0 / nv) * v;
  }
  return finish(v, growth, depth);
}

}  // namespace nahopf
