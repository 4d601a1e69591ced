#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pburgers/grid.hpp"

namespace pburgers {

struct InvariantResult {
  std::string module;
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  GridSpec grid = GridSpec::make(32, 64);
  int samples = 200;
  std::uint64_t seed = 1;
  double mu = 1.0;
  // Spectral decay of the random ensembles: (1 + k^2 + m^2)^{-decay/2}.
  double decay = 2.0;
};

// Seeded ensemble checks of the operator identities.
std::vector<InvariantResult> verify_torus_spectral(const VerifyOptions& opts);
std::vector<InvariantResult> verify_sobolev(const VerifyOptions& opts);
std::vector<InvariantResult> verify_burgers_op(const VerifyOptions& opts);

std::vector<InvariantResult> run_verification(const VerifyOptions& opts);

}  // namespace pburgers
