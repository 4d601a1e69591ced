#include "pburgers/imex.hpp"

#include <cmath>
#include <numbers>

#include "etdrk4.hpp"
#include "fft_plans.hpp"
#include "pburgers/errors.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

// Real space coefficients sum_k c_{k,m} e^{2 pi i k t} for m = m_min..M.
void evaluate_in_time(const Coefficients& c, double t, std::span<double> out) {
  const int nm = c.num_modes_x();
  for (int i = 0; i < nm; ++i) out[i] = c.at(0, c.m_min() + i).real();
  for (int k = 1; k <= c.K(); ++k) {
    const Complex e = std::polar(1.0, 2.0 * kPi * k * t);
    for (int i = 0; i < nm; ++i) out[i] += 2.0 * (c.at(k, c.m_min() + i) * e).real();
  }
}

}  // namespace

OracleResult imex_oracle(const DualField& f, double mu, const Field& u0, int n_periods,
                         int steps_per_period, const OracleOptions& opts) {
  if (!(mu > 0.0)) throw InputError("mu: must be > 0");
  if (n_periods < 1) throw InputError("oracle.n_periods: must be >= 1");
  if (steps_per_period < 1) throw InputError("oracle.steps_per_period: must be >= 1");
  if (u0.grid() != f.grid() || u0.basis() != Basis::kSine) {
    throw InputError("imex_oracle: u0 must be a sine field on the forcing grid");
  }
  const GridSpec& grid = f.grid();
  if (steps_per_period < 2 * grid.K + 1) {
    throw InputError("oracle.steps_per_period: must be >= 2K+1 to resolve the time modes");
  }
  const int M = grid.M;
  const int nxp = grid.padded_nx();
  const int steps = steps_per_period;
  const double h = 1.0 / steps;

  // Forcing at half-step resolution: row s is t = s h / 2.
  std::vector<double> forcing(static_cast<std::size_t>(2 * steps + 1) * M);
  for (int s = 0; s <= 2 * steps; ++s) {
    evaluate_in_time(f, 0.5 * h * s, std::span(forcing).subspan(static_cast<std::size_t>(s) * M, M));
  }

  std::vector<double> rates(M);
  for (int m = 1; m <= M; ++m) rates[m - 1] = -mu * (m * kPi) * (m * kPi);
  detail::Etdrk4 stepper(rates, h);

  std::vector<double> phys(nxp), sq(M + 1);
  int step_index = 0;
  double step_cfl = 0.0;
  const detail::Etdrk4::Nonlinear nonlinear = [&](std::span<const double> y, int stage,
                                                  std::span<double> out) {
    detail::space_synthesize(y, Basis::kSine, nxp, phys);
    double umax = 0.0;
    for (double& v : phys) {
      umax = std::max(umax, std::abs(v));
      v *= v;
    }
    if (stage == 0) step_cfl = h * umax * M * kPi;
    detail::space_analyze(phys, Basis::kCosine, sq);
    const double* fr = forcing.data() + static_cast<std::size_t>(2 * step_index + stage) * M;
    // -(u^2/2)_x in the sine family: +(m pi / 2) [u^2]_m
    for (int m = 1; m <= M; ++m) out[m - 1] = 0.5 * m * kPi * sq[m] + fr[m - 1];
  };

  std::vector<double> y(M);
  evaluate_in_time(u0, 0.0, y);

  OracleResult result;
  result.steps_per_period = steps;
  std::vector<double> record(static_cast<std::size_t>(steps) * M);
  for (int period = 1; period <= n_periods; ++period) {
    const std::vector<double> start = y;
    for (step_index = 0; step_index < steps; ++step_index) {
      std::copy(y.begin(), y.end(), record.begin() + static_cast<std::ptrdiff_t>(step_index) * M);
      stepper.step(y, nonlinear);
      result.max_cfl = std::max(result.max_cfl, step_cfl);
      double norm2 = 0.0;
      for (const double v : y) norm2 += v * v;
      if (!std::isfinite(norm2) || std::sqrt(norm2) > opts.blowup_norm ||
          step_cfl > opts.cfl_limit) {
        throw OracleInstabilityError(
            "IMEX oracle unstable in period " + std::to_string(period) + " (CFL " +
                std::to_string(step_cfl) + "); increase steps_per_period",
            step_cfl, period);
      }
    }
    double drift2 = 0.0;
    for (int m = 0; m < M; ++m) drift2 += (y[m] - start[m]) * (y[m] - start[m]);
    result.drift = std::sqrt(drift2);
    result.drift_history.push_back(result.drift);
    result.periods = period;
    if (result.drift < opts.drift_tol) {
      result.converged = true;
      break;
    }
  }

  // Time-Fourier analysis of the last recorded period.
  result.u = Field(grid, Basis::kSine);
  const auto& plan = detail::real_fft_plan(steps);
  for (int m = 1; m <= M; ++m) {
    for (int n = 0; n < steps; ++n) plan.real()[n] = record[static_cast<std::size_t>(n) * M + m - 1];
    plan.forward();
    for (int k = 0; k <= grid.K; ++k) {
      const Complex c = plan.spectrum()[k] / static_cast<double>(steps);
      result.u.at(k, m) = k == 0 ? Complex{c.real(), 0.0} : c;
      if (k > 0) result.u.at(-k, m) = std::conj(c);
    }
  }
  return result;
}

}  // namespace pburgers
