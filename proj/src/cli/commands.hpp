#pragma once

#include <iosfwd>

#include "cli/run_config.hpp"

namespace nahopf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

/// Parses argv, runs the chosen subcommand and maps failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_lyapunov(const RunConfig& cfg, std::ostream& out);
int cmd_field(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_forward(const RunConfig& cfg, std::ostream& out);
int cmd_ctime(const RunConfig& cfg, std::ostream& out);

}  // namespace nahopf::cli
