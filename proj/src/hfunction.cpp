#include "nahopf/hfunction.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nahopf {

HFunction HFunction::arctan(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("arctan h needs kappa > 0");
  return HFunction(ArctanH{kappa});
}

HFunction HFunction::custom(std::function<double(double)> h, std::function<double(double)> dh,
                            double declared_sup, double declared_slope_at_zero, std::string name) {
  if (!h || !dh) throw std::invalid_argument("custom h needs both value and derivative");
  return HFunction(CustomH{std::move(h), std::move(dh), declared_sup, declared_slope_at_zero,
                           std::move(name)});
}

double HFunction::sup() const {
  if (const auto* a = std::get_if<ArctanH>(&variant_)) return a->kappa * std::numbers::pi / 2.0;
  return std::get<CustomH>(variant_).declared_sup;
}

double HFunction::slope_at_zero() const {
  if (const auto* a = std::get_if<ArctanH>(&variant_)) return a->kappa;
  return std::get<CustomH>(variant_).declared_slope_at_zero;
}

std::string HFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (const auto* a = std::get_if<ArctanH>(&variant_)) {
    os << "arctan(kappa=" << a->kappa << ")";
  } else {
    os << std::get<CustomH>(variant_).name;
  }
  return os.str();
}

}  // namespace nahopf
