#pragma once

#include "nullcurve/config.hpp"
#include "nullcurve/report.hpp"

#include <map>
#include <string>

namespace nullcurve {

/// Exit code contract: 0 all-pass, 1 check failure, 2 config error,
/// 3 numeric failure (singularity/branch) in the lift/holonomy/mesh pipelines.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericError = 3;

struct CommandResult {
  VerificationReport report;
  int exit_code = kExitOk;
  std::map<std::string, std::string> artifacts; // path suffix → file contents
};

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_lift(const RunConfig& cfg);
CommandResult cmd_holonomy(const RunConfig& cfg);
CommandResult cmd_mesh(const RunConfig& cfg);
std::string corpus_listing();

} // namespace nullcurve
