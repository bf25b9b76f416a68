#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/output.hpp"
#include "nahopf/errors.hpp"

namespace nahopf::cli {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericError(std::string(what) + " is not finite");
}

double single_beta(const RunConfig& cfg) {
  const auto betas = cfg.beta_values();
  if (betas.size() != 1) throw ConfigError("beta", "this command needs exactly one beta");
  return betas.front();
}

void require_out(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("out", "an output prefix is required");
}

double estimate_lambda(const RunConfig& cfg, const BaseSystem& base) {
  const double lambda = lyapunov_max(cfg.make_cocycle(), base, cfg.start_point(base), cfg.n);
  require_finite(lambda, "Lyapunov exponent estimate");
  return lambda;
}

std::string side_of(double beta, const CriticalBetas& cb) {
  const auto near = [](double b, double crit) { return std::abs(b - crit) <= 0.02 * crit; };
  if (near(beta, cb.beta1) || near(beta, cb.beta2)) return "near_critical";
  if (beta < cb.beta1) return "below_beta1";
  if (beta > cb.beta2) return "above_beta2";
  return "between";
}

PsiField compute_field(const RunConfig& cfg, const BaseSystem& base, double beta) {
  const ModelSystem model = cfg.make_model(base, beta);
  PsiField field = psi_field(model.polar(), Grid{cfg.theta_res, cfg.alpha_res}, cfg.depth, cfg.threads);
  for (double v : field.values) require_finite(v, "psi+ field value");
  for (double v : field.ridge_value) require_finite(v, "psi+ ridge value");
  return field;
}

void parse_grid(const std::string& s, RunConfig& cfg) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) {
      cfg.theta_res = cfg.alpha_res = std::stoi(s);
    } else {
      cfg.theta_res = std::stoi(s.substr(0, x));
      cfg.alpha_res = std::stoi(s.substr(x + 1));
    }
  } catch (const std::exception&) {
    throw ConfigError("grid", "expected NxM, got '" + s + "'");
  }
}

void parse_v0(const std::string& s, RunConfig& cfg) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("v0", "expected x,y, got '" + s + "'");
  try {
    cfg.v0 = {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("v0", "expected x,y, got '" + s + "'");
  }
}

// Values from the file fill options not given on the command line. Top-level
// keys and keys under a section named after the subcommand are used.
void apply_config_file(CLI::App& sub, const std::string& path) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error& e) {
    throw ConfigError("config", e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && item.parents != std::vector<std::string>{sub.get_name()}) continue;
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw ConfigError("config", path + ": unknown key '" + item.name + "'");
    }
    if (opt->count() > 0) continue;
    std::string joined;
    for (const auto& in : item.inputs) joined += (joined.empty() ? "" : ",") + in;
    opt->add_result(joined);
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ConfigError(key, e.what());
    }
  }
}

}  // namespace

int cmd_lyapunov(const RunConfig& cfg, std::ostream& out) {
  const BaseSystem base = cfg.make_base();
  const double lambda = estimate_lambda(cfg, base);
  const CriticalBetas cb = critical_betas(cfg.make_h(), std::max(lambda, 0.0));
  out << "lambda " << format_number(lambda) << "\n"
      << "n " << cfg.n << "\n"
      << "beta1 " << format_number(cb.beta1) << "\n"
      << "beta2 " << format_number(cb.beta2) << "\n";
  if (!cfg.out.empty()) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config"] = cfg.to_json();
    j["lambda"] = lambda;
    j["n"] = cfg.n;
    j["beta1"] = cb.beta1;
    j["beta2"] = cb.beta2;
    write_file(cfg.out + ".lyapunov.json", j.dump(1) + "\n");
  }
  return kExitOk;
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  require_out(cfg);
  const double beta = single_beta(cfg);
  const BaseSystem base = cfg.make_base();
  const PsiField field = compute_field(cfg, base, beta);
  const RegimeReport report = classify(field, cfg.thresholds);
  if (cfg.wants("json")) write_file(cfg.out + ".field.json", field_json(field, report, cfg));
  if (cfg.wants("csv")) {
    write_file(cfg.out + ".field.csv", field_csv(field, cfg));
    write_file(cfg.out + ".projection.csv", projection_csv(field, cfg));
  }
  if (cfg.wants("ppm")) write_file(cfg.out + ".field.ppm", field_ppm(field, cfg));
  out << "beta " << format_number(beta) << " regime " << to_string(report.regime) << " min_psi "
      << format_number(report.min_psi) << " max_psi " << format_number(report.max_psi) << "\n";
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto betas = cfg.beta_values();
  if (betas.empty()) throw ConfigError("beta", "empty range: give --beta values or --beta-range a:b:steps");
  const BaseSystem base = cfg.make_base();
  const double lambda = estimate_lambda(cfg, base);
  const CriticalBetas cb = critical_betas(cfg.make_h(), std::max(lambda, 0.0));

  std::string table = csv_preamble(cfg);
  table += "beta,regime,min_psi,max_psi,max_positive_fraction,lambda,beta1,beta2,position\n";
  for (double beta : betas) {
    const RegimeReport rep = classify(compute_field(cfg, base, beta), cfg.thresholds);
    table += format_number(beta) + "," + std::string(to_string(rep.regime)) + "," +
             format_number(rep.min_psi) + "," + format_number(rep.max_psi) + "," +
             format_number(rep.positive_fraction.max) + "," + format_number(lambda) + "," +
             format_number(cb.beta1) + "," + format_number(cb.beta2) + "," + side_of(beta, cb) + "\n";
  }
  if (cfg.out.empty()) {
    out << table;
  } else {
    write_file(cfg.out + ".scan.csv", table);
    out << "wrote " << cfg.out << ".scan.csv (" << betas.size() << " rows)\n";
  }
  return kExitOk;
}

int cmd_forward(const RunConfig& cfg, std::ostream& out) {
  const double beta = single_beta(cfg);
  const BaseSystem base = cfg.make_base();
  const ModelSystem model = cfg.make_model(base, beta);
  const BasePoint start = cfg.start_point(base);
  const ForwardReport rep = two_point_forward(model, start, cfg.v0, cfg.steps, cfg.burn_in, cfg.depth);
  for (double d : rep.distance) require_finite(d, "endpoint distance");

  if (!cfg.out.empty()) {
    std::string csv = csv_preamble(cfg);
    csv += "step,theta,x,y,norm,endpoint_radius,endpoint_distance\n";
    for (std::size_t k = 0; k < rep.norms.size(); ++k) {
      const BasePoint t = base.advance(start, static_cast<std::int64_t>(k));
      const double coord = base.is_rotation() ? base.angle(t) : static_cast<double>(t.offset);
      csv += std::to_string(k) + "," + format_number(coord) + "," + format_number(rep.trajectory[k].x) +
             "," + format_number(rep.trajectory[k].y) + "," + format_number(rep.norms[k]) + "," +
             format_number(rep.endpoint_radius[k]) + "," + format_number(rep.distance[k]) + "\n";
    }
    write_file(cfg.out + ".forward.csv", csv);
  }
  out << "final_norm " << format_number(rep.norms.back()) << "\n"
      << "final_distance " << format_number(rep.distance.back()) << "\n"
      << "max_distance_after_burn_in " << format_number(rep.max_distance_after_burn_in) << "\n";
  return kExitOk;
}

int cmd_ctime(const RunConfig& cfg, std::ostream& out) {
  const auto betas = cfg.beta_values();
  if (betas.size() > 1) throw ConfigError("beta", "ctime takes at most one beta");
  const double beta = betas.empty() ? 0.5 : betas.front();
  const ctime::PropertyReport rep = ctime::time_one_checks(
      cfg.make_field_spec(), ctime::EtaSpec::negative_identity(), beta, cfg.samples, cfg.step, cfg.seed + 1);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << format_number(c.value) << " (threshold "
        << format_number(c.threshold) << ")\n";
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
  }
  if (!cfg.out.empty()) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config"] = cfg.to_json();
    j["beta"] = beta;
    j["checks"] = checks;
    write_file(cfg.out + ".ctime.json", j.dump(1) + "\n");
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string grid;
  std::string v0;
  std::string config_path;

  CLI::App app{"Nonautonomous Hopf bifurcation simulator for forced SL(2,R) skew products", "nahopf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // options whose values a preset may supply
  std::map<std::string, CLI::Option*> preset_options;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "INI/TOML file with option values");
    sub->add_option("--preset", cfg.preset, "golden-arctan | rotation | diag");
    auto* base_opt = sub->add_option("--base", cfg.base, "rotation | random");
    auto* rho_opt = sub->add_option("--rho", cfg.rho, "rotation number of the base");
    sub->add_option("--seed", cfg.seed, "random-shift seed");
    sub->add_option("--alphabet", cfg.alphabet, "random-shift alphabet size");
    sub->add_option("--window", cfg.window, "random-shift window half-width");
    auto* cocycle_opt = sub->add_option("--cocycle", cfg.cocycle, "scaled-rotation | rotation | diag | list:<file>");
    auto* c_opt = sub->add_option("--c", cfg.c, "scaled rotation cocycle parameter");
    auto* angle_opt = sub->add_option("--angle", cfg.angle, "rotation cocycle angle (radians)");
    auto* diag_opt = sub->add_option("--diag", cfg.diag, "diag cocycle: diag(d, 1/d)");
    auto* kappa_opt = sub->add_option("--kappa", cfg.kappa, "h(x) = kappa * arctan(x)");
    sub->add_option("--beta", cfg.betas, "bifurcation parameter(s)")->delimiter(',');
    sub->add_option("--beta-range", cfg.beta_range, "a:b:steps (inclusive)");
    sub->add_option("--grid", grid, "NxM grid (theta x alpha)");
    sub->add_option("--depth", cfg.depth, "pullback depth");
    sub->add_option("--eps-zero", cfg.thresholds.eps_zero, "Trivial threshold");
    sub->add_option("--eps-pos", cfg.thresholds.eps_pos, "positivity threshold");
    sub->add_option("--segment-fraction", cfg.thresholds.segment_fraction, "max positive fraction per row");
    sub->add_option("--n", cfg.n, "cocycle steps for the Lyapunov estimate");
    sub->add_option("--theta0", cfg.theta0, "initial base angle");
    sub->add_option("--v0", v0, "initial vector x,y");
    sub->add_option("--steps", cfg.steps, "forward steps");
    sub->add_option("--burn-in", cfg.burn_in, "forward burn-in");
    sub->add_option("--field", cfg.field, "zero | rotation | diagonal | forced");
    sub->add_option("--lambda", cfg.lambda, "continuous-time field strength");
    sub->add_option("--omega", cfg.omega, "continuous-time rotation rate");
    sub->add_option("--step", cfg.step, "RK4 step");
    sub->add_option("--samples", cfg.samples, "sampled (theta, alpha) pairs");
    sub->add_option("--out", cfg.out, "output path prefix");
    sub->add_option("--format", cfg.format, "comma list of csv,json,ppm");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    preset_options = {{"base", base_opt}, {"rho", rho_opt}, {"cocycle", cocycle_opt}, {"c", c_opt},
                      {"angle", angle_opt}, {"diag", diag_opt}, {"kappa", kappa_opt}};
  };

  std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {"lyapunov", cmd_lyapunov}, {"field", cmd_field}, {"scan", cmd_scan},
      {"forward", cmd_forward},   {"ctime", cmd_ctime}};
  const std::map<std::string, std::string> help{
      {"lyapunov", "maximal Lyapunov exponent and critical parameters"},
      {"field", "psi+ field, classification and figure data"},
      {"scan", "regime classification over a beta sweep"},
      {"forward", "forward orbit against the two-point attractor"},
      {"ctime", "continuous-time time-one map property checks"}};
  std::map<std::string, std::map<std::string, CLI::Option*>> per_command;
  for (const auto& [name, fn] : commands) {
    add_common(app.add_subcommand(name, help.at(name)));
    per_command[name] = preset_options;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (!config_path.empty()) apply_config_file(*sub, config_path);
    cfg.command = name;
    if (!grid.empty()) parse_grid(grid, cfg);
    if (!v0.empty()) parse_v0(v0, cfg);
    if (!cfg.preset.empty()) {
      const RunConfig explicit_cfg = cfg;
      apply_preset(cfg, cfg.preset);
      const auto& opts = per_command.at(name);
      if (opts.at("base")->count()) cfg.base = explicit_cfg.base;
      if (opts.at("rho")->count()) cfg.rho = explicit_cfg.rho;
      if (opts.at("cocycle")->count()) cfg.cocycle = explicit_cfg.cocycle;
      if (opts.at("c")->count()) cfg.c = explicit_cfg.c;
      if (opts.at("angle")->count()) cfg.angle = explicit_cfg.angle;
      if (opts.at("diag")->count()) cfg.diag = explicit_cfg.diag;
      if (opts.at("kappa")->count()) cfg.kappa = explicit_cfg.kappa;
    }
    if (cfg.cocycle.rfind("list:", 0) == 0) cfg.list_matrices = read_matrix_list(cfg.cocycle.substr(5));
    cfg.validate();
    return commands.at(name)(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace nahopf::cli
