#pragma once

// Radial saturation function h: [0, inf) -> [0, sup_h).

#include <cmath>
#include <functional>
#include <string>
#include <variant>

namespace nahopf {

/// h(x) = kappa * arctan(x).
struct ArctanH {
  double kappa = 1.0;

  double operator()(double x) const { return kappa * std::atan(x); }
  double derivative(double x) const { return kappa / (1.0 + x * x); }
};

/// User-supplied h with its derivative and declared constants.
struct CustomH {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  double declared_sup = 0.0;
  double declared_slope_at_zero = 0.0;
  std::string name = "custom";

  double operator()(double x) const { return value(x); }
  double derivative(double x) const { return slope(x); }
};

class HFunction {
 public:
  static HFunction arctan(double kappa);
  static HFunction custom(std::function<double(double)> h, std::function<double(double)> dh,
                          double declared_sup, double declared_slope_at_zero,
                          std::string name = "custom");

  double operator()(double x) const {
    return std::visit([x](const auto& f) { return f(x); }, variant_);
  }
  double derivative(double x) const {
    return std::visit([x](const auto& f) { return f.derivative(x); }, variant_);
  }
  double sup() const;
  double slope_at_zero() const;
  std::string describe() const;

  /// Calls `fn` with the concrete ArctanH / CustomH so hot loops avoid a
  /// dispatch per evaluation.
  template <class F>
  decltype(auto) visit(F&& fn) const {
    return std::visit(std::forward<F>(fn), variant_);
  }

 private:
  explicit HFunction(std::variant<ArctanH, CustomH> v) : variant_(std::move(v)) {}
  std::variant<ArctanH, CustomH> variant_;
};

}  // namespace nahopf
