#pragma once

// Invertible driving dynamics on the base space: an irrational circle
// rotation or a two-sided symbol shift realised on a pre-generated window.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

namespace nahopf {

/// (sqrt(5) - 1) / 2 at full double precision.
inline constexpr double kGoldenRotation = 0.6180339887498948482;

inline constexpr std::int64_t kDefaultWindow = 2'000'000;

/// Thrown when a random-shift orbit leaves its pre-generated window.
class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A point of the base. For a rotation the angle is `anchor + offset * rho`
/// reduced mod 1 in a single step, so integer moves are exact bijections.
/// For a random shift `offset` is the symbol index and `anchor` is zero.
struct BasePoint {
  double anchor = 0.0;
  std::int64_t offset = 0;

  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

struct CircleRotation {
  double rho = kGoldenRotation;
};

struct RandomShift {
  std::uint64_t seed = 0;
  std::int64_t window = kDefaultWindow;
  std::uint32_t alphabet_size = 2;
  // index i of the window [-window, window] lives at symbols[i + window]
  std::shared_ptr<const std::vector<std::uint32_t>> symbols;
};

class BaseSystem {
 public:
  static BaseSystem rotation(double rho = kGoldenRotation);
  static BaseSystem random_shift(std::uint64_t seed, std::uint32_t alphabet_size,
                                 std::int64_t window = kDefaultWindow);

  bool is_rotation() const { return std::holds_alternative<CircleRotation>(variant_); }
  const CircleRotation& as_rotation() const;
  const RandomShift& as_random() const;

  /// Base point at `angle` (rotation only), reduced into [0,1).
  BasePoint at_angle(double angle) const;
  /// Base point at symbol index `index` (random shift only).
  BasePoint at_index(std::int64_t index) const;

  BasePoint advance(const BasePoint& theta, std::int64_t k) const;
  std::vector<BasePoint> orbit(const BasePoint& theta0, std::int64_t n_back,
                               std::int64_t n_fwd) const;

  /// Angle in [0,1). Rotation only.
  double angle(const BasePoint& theta) const;
  /// Symbol at the point's index. Random shift only.
  std::uint32_t symbol(const BasePoint& theta) const;

 private:
  explicit BaseSystem(std::variant<CircleRotation, RandomShift> v) : variant_(std::move(v)) {}
  void check_window(std::int64_t index) const;

  std::variant<CircleRotation, RandomShift> variant_;
};

/// x mod 1 in [0,1).
double wrap_unit(double x);

/// anchor + k * rho mod 1 with a single reduction; the product k*rho is
/// split into its rounded value and exact rounding error.
double rotate_angle(double anchor, std::int64_t k, double rho);

}  // namespace nahopf
