#include "cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace nahopf::cli {
namespace {

nlohmann::ordered_json header_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["config"] = cfg.to_json();
  return j;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_preamble(const RunConfig& cfg) {
  return std::string("# nahopf ") + kVersion + " config=" + cfg.to_json().dump() + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) {
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + p.parent_path().string() + "': " + ec.message());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string field_json(const PsiField& field, const RegimeReport& report, const RunConfig& cfg) {
  auto j = header_json(cfg);
  j["beta"] = field.beta;
  j["depth"] = field.depth;
  j["grid"] = {{"theta_res", field.grid.theta_res}, {"alpha_res", field.grid.alpha_res}};
  j["r_start"] = field.r_start;
  j["rotation_base"] = field.rotation_base;
  j["angle_convention"] = "projective: v(alpha) = (cos pi alpha, sin pi alpha); nodes at cell centres";
  std::vector<double> rows(field.grid.theta_res);
  for (int i = 0; i < field.grid.theta_res; ++i) rows[i] = field.row_coordinate(i);
  j["row_coordinates"] = rows;
  j["layout"] = "row-major values[theta][alpha]";
  j["values"] = field.values;
  j["ridge_alpha"] = field.ridge_alpha;
  j["ridge_value"] = field.ridge_value;
  j["classification"] = {
      {"regime", std::string(to_string(report.regime))},
      {"max_psi", report.max_psi},
      {"min_psi", report.min_psi},
      {"positive_fraction", {{"mean", report.positive_fraction.mean},
                             {"min", report.positive_fraction.min},
                             {"max", report.positive_fraction.max}}},
      {"eps_zero", report.params.eps_zero},
      {"eps_pos", report.params.eps_pos},
      {"segment_fraction", report.params.segment_fraction},
  };
  return j.dump(1) + "\n";
}

std::string field_csv(const PsiField& field, const RunConfig& cfg) {
  std::string out = csv_preamble(cfg);
  out += "row,theta,alpha,psi,cell_value\n";
  for (int i = 0; i < field.grid.theta_res; ++i) {
    const std::string prefix = std::to_string(i) + "," + format_number(field.row_coordinate(i)) + ",";
    for (int j = 0; j < field.grid.alpha_res; ++j) {
      out += prefix + format_number(field.grid.alpha_node(j)) + "," + format_number(field.at(i, j)) +
             "," + format_number(field.cell_value(i, j)) + "\n";
    }
  }
  return out;
}

std::string field_ppm(const PsiField& field, const RunConfig& cfg) {
  std::string out = "P6\n# nahopf " + std::string(kVersion) + " config=" + cfg.to_json().dump() + "\n";
  out += std::to_string(field.grid.alpha_res) + " " + std::to_string(field.grid.theta_res) + "\n255\n";
  for (int i = 0; i < field.grid.theta_res; ++i) {
    for (int j = 0; j < field.grid.alpha_res; ++j) {
      const double scaled = std::clamp(field.cell_value(i, j) / field.r_start, 0.0, 1.0);
      const auto level = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * scaled)));
      out.append(3, level);
    }
  }
  return out;
}

std::string projection_csv(const PsiField& field, const RunConfig& cfg) {
  std::string out = csv_preamble(cfg);
  out += "row,theta,plane_alpha,radius,x,y,kind\n";
  const auto emit = [&](int i, double plane_alpha, double r, const char* kind) {
    const double t = 2.0 * std::numbers::pi * plane_alpha;
    out += std::to_string(i) + "," + format_number(field.row_coordinate(i)) + "," +
           format_number(plane_alpha) + "," + format_number(r) + "," + format_number(r * std::cos(t)) +
           "," + format_number(r * std::sin(t)) + "," + kind + "\n";
  };
  for (int i = 0; i < field.grid.theta_res; ++i) {
    for (int half = 0; half < 2; ++half) {
      for (int j = 0; j < field.grid.alpha_res; ++j) {
        emit(i, 0.5 * (field.grid.alpha_node(j) + half), field.at(i, j), "grid");
      }
    }
    const PlaneAngles ends = plane_from_projective(ProjAngle(field.ridge_alpha[i]));
    emit(i, ends.first, field.ridge_value[i], "ridge");
    emit(i, ends.second, field.ridge_value[i], "ridge");
  }
  return out;
}

}  // namespace nahopf::cli
