#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nahopf/attractor.hpp"
#include "nahopf/ctime.hpp"
#include "nahopf/model.hpp"

namespace nahopf::cli {

/// Invalid run configuration; `field` names the offending option.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("--" + field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string preset;

  // base
  std::string base = "rotation";
  double rho = kGoldenRotation;
  std::uint64_t seed = 0;
  std::uint32_t alphabet = 2;
  std::int64_t window = kDefaultWindow;

  // cocycle: scaled-rotation | rotation | diag | list:<file>
  std::string cocycle = "scaled-rotation";
  double c = 0.5;
  double angle = 0.0;
  double diag = 2.0;
  std::vector<Mat2> list_matrices;

  double kappa = kGoldenArctanKappa;

  std::vector<double> betas;
  std::string beta_range;

  int theta_res = kDefaultGridResolution;
  int alpha_res = kDefaultGridResolution;
  std::int64_t depth = kDefaultPullbackDepth;
  ClassifyParams thresholds;

  std::int64_t n = 10'000'000;
  double theta0 = 0.0;
  Vec2 v0{0.3, 0.2};
  std::int64_t steps = 10'000;
  std::int64_t burn_in = 5'000;

  // continuous time: zero | rotation | diagonal | forced
  std::string field = "forced";
  double lambda = 0.5;
  double omega = 1.0;
  double step = ctime::kDefaultStep;
  int samples = 100;

  std::string out;
  std::string format = "csv,json";
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;

  bool wants(const std::string& fmt) const;
  /// --beta values, or the --beta-range grid a:b:steps (inclusive ends).
  std::vector<double> beta_values() const;

  BaseSystem make_base() const;
  CocycleSpec make_cocycle() const;
  HFunction make_h() const;
  ModelSystem make_model(const BaseSystem& base, double beta) const;
  BasePoint start_point(const BaseSystem& base) const;
  ctime::LinearFieldSpec make_field_spec() const;

  nlohmann::ordered_json to_json() const;
};

/// Applies a named preset (golden-arctan | rotation | diag).
void apply_preset(RunConfig& cfg, const std::string& name);

/// Parses "a:b:steps".
std::vector<double> parse_beta_range(const std::string& spec);

/// One matrix per line: "a b c d". Blank lines and '#' comments are skipped.
std::vector<Mat2> read_matrix_list(const std::string& path);

}  // namespace nahopf::cli
