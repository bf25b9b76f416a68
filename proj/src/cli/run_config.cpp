#include "cli/run_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace nahopf::cli {
namespace {

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, sep);) out.push_back(tok);
  return out;
}

double parse_double(const std::string& field, const std::string& tok) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "cannot parse number '" + tok + "'");
  }
}

}  // namespace

std::vector<double> parse_beta_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  require(parts.size() == 3, "beta-range", "expected a:b:steps, got '" + spec + "'");
  const double a = parse_double("beta-range", parts[0]);
  const double b = parse_double("beta-range", parts[1]);
  long long steps = 0;
  try {
    steps = std::stoll(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError("beta-range", "cannot parse step count '" + parts[2] + "'");
  }
  require(steps >= 1, "beta-range", "empty range (steps must be >= 1)");
  require(a <= b, "beta-range", "empty range (need a <= b)");
  require(steps > 1 || a == b, "beta-range", "a single step needs a == b");
  std::vector<double> out;
  for (long long k = 0; k < steps; ++k) {
    out.push_back(steps == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  return out;
}

std::vector<Mat2> read_matrix_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cocycle", "cannot open matrix list '" + path + "'");
  std::vector<Mat2> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Mat2 m;
    if (!(ls >> m.a)) continue;
    if (!(ls >> m.b >> m.c >> m.d)) {
      throw ConfigError("cocycle", path + ":" + std::to_string(lineno) + ": expected 4 numbers");
    }
    if (std::abs(m.det() - 1.0) > kDetTolerance) {
      throw ConfigError("cocycle", path + ":" + std::to_string(lineno) + ": determinant is not 1");
    }
    out.push_back(m);
  }
  require(!out.empty(), "cocycle", "matrix list '" + path + "' is empty");
  return out;
}

void apply_preset(RunConfig& cfg, const std::string& name) {
  cfg.preset = name;
  cfg.base = "rotation";
  cfg.rho = kGoldenRotation;
  cfg.kappa = kGoldenArctanKappa;
  if (name == "golden-arctan") {
    cfg.cocycle = "scaled-rotation";
    cfg.c = 0.5;
  } else if (name == "rotation") {
    cfg.cocycle = "rotation";
    cfg.angle = 2.0 * std::numbers::pi * 0.1;
  } else if (name == "diag") {
    cfg.cocycle = "diag";
    cfg.diag = 2.0;
  } else {
    throw ConfigError("preset", "unknown preset '" + name + "' (golden-arctan|rotation|diag)");
  }
}

bool RunConfig::wants(const std::string& fmt) const {
  for (const auto& tok : split(format, ',')) {
    if (tok == fmt) return true;
  }
  return false;
}

std::vector<double> RunConfig::beta_values() const {
  if (!beta_range.empty()) return parse_beta_range(beta_range);
  return betas;
}

void RunConfig::validate() const {
  require(base == "rotation" || base == "random", "base", "must be rotation or random");
  require(std::isfinite(rho), "rho", "must be finite");
  require(alphabet >= 1, "alphabet", "must be >= 1");
  require(window >= 1, "window", "must be >= 1");
  const bool is_list = cocycle.rfind("list:", 0) == 0;
  require(cocycle == "scaled-rotation" || cocycle == "rotation" || cocycle == "diag" || is_list, "cocycle",
          "must be scaled-rotation, rotation, diag or list:<file>");
  require(c > 0.0, "c", "must be > 0");
  require(diag > 0.0, "diag", "must be > 0");
  require(kappa > 0.0, "kappa", "must be > 0");
  if (cocycle == "scaled-rotation") require(base == "rotation", "cocycle", "scaled-rotation needs --base rotation");
  if (is_list) {
    require(base == "random", "cocycle", "list:<file> needs --base random");
    require(list_matrices.size() == alphabet, "alphabet",
            "must equal the number of matrices in the list (" + std::to_string(list_matrices.size()) + ")");
  }
  require(betas.empty() || beta_range.empty(), "beta", "give either --beta or --beta-range, not both");
  for (double b : beta_values()) require(std::isfinite(b) && b > 0.0, "beta", "values must be > 0");
  require(theta_res >= 2 && alpha_res >= 2, "grid", "resolutions must be >= 2");
  require(depth >= 1, "depth", "must be >= 1");
  require(depth < window || base == "rotation", "depth", "exceeds the random-shift window");
  require(thresholds.eps_zero > 0.0 && thresholds.eps_zero <= thresholds.eps_pos, "eps-zero",
          "need 0 < eps-zero <= eps-pos");
  require(thresholds.segment_fraction > 0.0 && thresholds.segment_fraction < 1.0, "segment-fraction",
          "must lie in (0, 1)");
  require(n >= 1, "n", "must be >= 1");
  require(base == "random" || (theta0 >= 0.0 && theta0 < 1.0), "theta0", "must lie in [0, 1)");
  require(std::isfinite(v0.x) && std::isfinite(v0.y), "v0", "must be finite");
  require(steps >= 0 && burn_in >= 0 && burn_in <= steps, "burn-in", "need 0 <= burn-in <= steps");
  require(field == "zero" || field == "rotation" || field == "diagonal" || field == "forced", "field",
          "must be zero, rotation, diagonal or forced");
  require(step > 0.0 && step <= 1e-2, "step", "must lie in (0, 1e-2]");
  require(samples >= 1, "samples", "must be >= 1");
  for (const auto& tok : split(format, ',')) {
    require(tok == "csv" || tok == "json" || tok == "ppm", "format", "unknown format '" + tok + "'");
  }
}

BaseSystem RunConfig::make_base() const {
  if (base == "rotation") return BaseSystem::rotation(rho);
  return BaseSystem::random_shift(seed, alphabet, window);
}

CocycleSpec RunConfig::make_cocycle() const {
  if (cocycle == "scaled-rotation") return CocycleSpec::scaled_rotation(c);
  if (cocycle == "rotation") return CocycleSpec::rotation(angle);
  if (cocycle == "diag") return CocycleSpec::constant(Mat2::diag(diag, 1.0 / diag));
  return CocycleSpec::matrix_list(list_matrices);
}

HFunction RunConfig::make_h() const { return HFunction::arctan(kappa); }

ModelSystem RunConfig::make_model(const BaseSystem& b, double beta) const {
  ModelSystem sys{b, make_cocycle(), make_h(), beta};
  sys.validate();
  return sys;
}

BasePoint RunConfig::start_point(const BaseSystem& b) const {
  return b.is_rotation() ? b.at_angle(theta0) : b.at_index(0);
}

ctime::LinearFieldSpec RunConfig::make_field_spec() const {
  ctime::LinearFieldSpec spec;
  spec.rho = rho;
  if (field == "zero") spec.field = ctime::ZeroField{};
  if (field == "rotation") spec.field = ctime::RotationGenerator{omega};
  if (field == "diagonal") spec.field = ctime::DiagonalField{lambda};
  if (field == "forced") spec.field = ctime::ForcedField{lambda, omega};
  return spec;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["preset"] = preset;
  j["base"] = base;
  j["rho"] = rho;
  j["seed"] = seed;
  j["alphabet"] = alphabet;
  j["window"] = window;
  j["cocycle"] = cocycle;
  j["c"] = c;
  j["angle"] = angle;
  j["diag"] = diag;
  auto mats = nlohmann::ordered_json::array();
  for (const auto& m : list_matrices) mats.push_back({m.a, m.b, m.c, m.d});
  j["list_matrices"] = mats;
  j["h"] = "arctan";
  j["kappa"] = kappa;
  j["beta"] = betas;
  j["beta_range"] = beta_range;
  j["grid"] = {theta_res, alpha_res};
  j["depth"] = depth;
  j["eps_zero"] = thresholds.eps_zero;
  j["eps_pos"] = thresholds.eps_pos;
  j["segment_fraction"] = thresholds.segment_fraction;
  j["n"] = n;
  j["theta0"] = theta0;
  j["v0"] = {v0.x, v0.y};
  j["steps"] = steps;
  j["burn_in"] = burn_in;
  j["field"] = field;
  j["lambda"] = lambda;
  j["omega"] = omega;
  j["step"] = step;
  j["samples"] = samples;
  j["out"] = out;
  j["format"] = format;
  return j;
}

}  // namespace nahopf::cli
