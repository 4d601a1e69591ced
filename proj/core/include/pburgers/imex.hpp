#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers {

struct OracleOptions {
  // Convergence to the periodic orbit: period-to-period L2 drift below this.
  double drift_tol = 1e-10;
  // Explicit-convection stability limit on h max|u| M pi.
  double cfl_limit = 2.5;
  // Norm beyond which the run is declared unstable.
  double blowup_norm = 1e8;
};

struct OracleResult {
  Field u;                            // final period, time-Fourier analyzed
  double drift = 0.0;                 // last period-to-period L2 drift
  std::vector<double> drift_history;  // one entry per period
  int periods = 0;
  bool converged = false;
  double max_cfl = 0.0;
  int steps_per_period = 0;
};

class OracleInstabilityError : public std::runtime_error {
 public:
  OracleInstabilityError(const std::string& what, double cfl, int period)
      : std::runtime_error(what), cfl_(cfl), period_(period) {}
  double cfl() const { return cfl_; }
  int period() const { return period_; }

 private:
  double cfl_;
  int period_;
};

// Time-marching oracle for the initial-value problem
//   u_t = mu u_xx - u u_x + f(t, x),  u(t, 0) = u(t, 1) = 0,
// in the sine Galerkin space of f's grid. Diffusion is integrated exactly
// (exponential integrating factor, fourth-order ETD Runge-Kutta); convection
// is explicit and dealiased. Integration stops after n_periods or once the
// drift is below drift_tol; the last period is returned as a Field.
OracleResult imex_oracle(const DualField& f, double mu, const Field& u0, int n_periods,
                         int steps_per_period, const OracleOptions& opts = {});

}  // namespace pburgers
