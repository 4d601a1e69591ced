#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pburgers_cli/config.hpp"

namespace pburgers::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantFailure = 1,
  kInputError = 2,
  kNonconvergence = 3,
  kCertificateFailure = 4,
  kOracleInstability = 5,
};

// Each command writes its outputs into out_dir (created if missing) and
// returns an exit code. Failures also write error.json describing the cause.
int cmd_solve(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_verify(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_colehopf(const RunConfig& cfg, const std::filesystem::path& out_dir);
int cmd_oracle_compare(const RunConfig& cfg, const std::filesystem::path& out_dir);

const std::vector<std::string>& command_names();

// Loads the config, runs the named command and maps every error to its exit
// code. Never throws.
int run_command(const std::string& name, const std::filesystem::path& config_path,
                const std::filesystem::path& out_dir);

}  // namespace pburgers::cli
