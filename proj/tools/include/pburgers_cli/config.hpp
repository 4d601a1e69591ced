#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pburgers/forcing.hpp"
#include "pburgers/grid.hpp"
#include "pburgers/solver.hpp"

namespace pburgers::cli {

struct VerifySection {
  int samples = 200;
  double decay = 2.0;
};

struct ProbeSection {
  // Random fields used to estimate C_emp for the advisory dt bound; 0 disables.
  int samples = 64;
};

enum class DriftSource { kZero, kFile, kSolve };

struct ColeHopfSection {
  DriftSource drift = DriftSource::kSolve;
  std::filesystem::path file;  // CSV with header t,x,u; used when drift = file
  double tol = 1e-12;
  int steps = 512;
  int max_iterations = 500;
  std::optional<double> c;  // Cole-Hopf scale, default -2 mu
  bool write_phi = true;
};

struct OracleSection {
  int n_periods = 200;
  int steps_per_period = 2048;
  double threshold = 1e-6;
  double drift_tol = 1e-10;
  double cfl_limit = 2.5;
};

struct RunConfig {
  double mu = 1.0;
  GridSpec grid = GridSpec::make(32, 64);
  ForcingSpec forcing;
  SolveConfig solve;
  std::uint64_t seed = 1;
  VerifySection verify;
  ProbeSection probe;
  ColeHopfSection colehopf;
  OracleSection oracle;
};

// Parses and validates a run configuration. Relative paths are resolved
// against base_dir. Errors throw InputError naming the offending field path.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

}  // namespace pburgers::cli
