#pragma once

// Deterministic writers for the CLI artifacts. Every artifact carries the
// artifact version and the full run configuration.

#include <string>

#include "cli/run_config.hpp"
#include "nahopf/attractor.hpp"

namespace nahopf::cli {

inline constexpr const char* kVersion = NAHOPF_VERSION;

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// "# nahopf <version> config=<compact json>\n"
std::string csv_preamble(const RunConfig& cfg);

/// Writes `content`, creating parent directories. Throws IoError.
void write_file(const std::string& path, const std::string& content);

std::string field_json(const PsiField& field, const RegimeReport& report, const RunConfig& cfg);
/// Columns: row,theta,alpha,psi,cell_value
std::string field_csv(const PsiField& field, const RunConfig& cfg);
/// Binary P6 heatmap of cell values, one pixel per cell, luminance psi / r_start.
std::string field_ppm(const PsiField& field, const RunConfig& cfg);
/// Original-plane projection. Columns: row,theta,plane_alpha,radius,x,y,kind
std::string projection_csv(const PsiField& field, const RunConfig& cfg);

}  // namespace nahopf::cli
