#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers {

// a cos(2 pi k t + phase) sin(m pi x), k >= 0, m >= 1.
struct ModalTerm {
  double a = 1.0;
  int k = 0;
  int m = 1;
  double phase = 0.0;
};

// f = g_x with cosine coefficients
//   g_{k,m} = amplitude z_{k,m} (1 + k^2 + m^2)^{-p/2},  z complex normal,
// restricted to |k| <= cutoff and m <= cutoff when cutoff > 0. For p <= 1 the
// family is not bounded in L2 as the grid grows while its gradient-dual norm
// stays finite on every grid.
struct RoughTerm {
  double p = 0.5;
  std::uint64_t seed = 0;
  int cutoff = 0;
  double amplitude = 1.0;
};

using ForcingTerm = std::variant<ModalTerm, RoughTerm>;

struct ForcingSpec {
  std::vector<ForcingTerm> terms;
};

DualField build_forcing(const ForcingSpec& spec, const GridSpec& grid);

// Coefficient-sum diagnostics of a forcing on its grid.
struct ForcingDiagnostics {
  double l2_sum = 0.0;    // sum |f_{k,m}|^2 (grows without bound for rough data)
  double dual_norm = 0.0; // ||f||_*
};
ForcingDiagnostics forcing_diagnostics(const DualField& f);

// Fixed benchmark forcings:
//   "steady"      2 sin(pi x)
//   "oscillatory" 2 cos(2 pi t) sin(pi x)
//   "rough"       g_x with p = 1/2, amplitude 0.1, seed 20240917, cutoff 16
ForcingSpec benchmark_forcing(const std::string& name);
const std::vector<std::string>& benchmark_names();

}  // namespace pburgers
