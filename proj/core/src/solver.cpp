#include "pburgers/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gmres.hpp"
#include "pburgers/errors.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

// Inner product whose norm is ||.||_*.
double dual_dot(const DualField& a, const DualField& b) {
  double acc = 0.0;
  for (int k = -a.K(); k <= a.K(); ++k) {
    for (int m = 1; m <= a.m_max(); ++m) {
      acc += (a.at(k, m) * std::conj(b.at(k, m))).real() / ((m * kPi) * (m * kPi));
    }
  }
  return acc;
}

Field predict(const Branch& branch, double lambda, Predictor predictor, const GridSpec& grid) {
  if (branch.entries.empty()) return Field::zeros(grid);
  const BranchEntry& last = branch.entries.back();
  if (predictor == Predictor::kSecant && branch.entries.size() >= 2) {
    const BranchEntry& prev = branch.entries[branch.entries.size() - 2];
    const double w = (lambda - last.lambda) / (last.lambda - prev.lambda);
    Field u = last.u;
    u.axpy(w, last.u - prev.u);
    return u;
  }
  return last.u;
}

}  // namespace

const char* to_string(Predictor p) {
  return p == Predictor::kSecant ? "secant" : "previous-solution";
}

std::vector<double> SolveConfig::uniform_lambda_grid(int n) {
  std::vector<double> grid(static_cast<std::size_t>(std::max(n, 2)));
  const int last = static_cast<int>(grid.size()) - 1;
  for (int i = 0; i <= last; ++i) grid[i] = static_cast<double>(i) / last;
  return grid;
}

void SolveConfig::validate() const {
  if (!(newton_tol > 0.0)) throw InputError("solve.newton_tol: must be > 0");
  if (max_newton < 1) throw InputError("solve.max_newton: must be >= 1");
  if (!(krylov_tol > 0.0)) throw InputError("solve.krylov_tol: must be > 0");
  if (krylov_max < 1) throw InputError("solve.krylov_max: must be >= 1");
  if (krylov_restart < 1) throw InputError("solve.krylov_restart: must be >= 1");
  if (lambda_grid.size() < 2 || lambda_grid.front() != 0.0 || lambda_grid.back() != 1.0) {
    throw InputError("solve.lambda_grid: must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > lambda_grid[i - 1])) {
      throw InputError("solve.lambda_grid: must be strictly increasing");
    }
  }
  if (!(c_emp >= 0.0)) throw InputError("solve.c_emp: must be >= 0");
}

EstimateReport make_report(const Field& u, const DualField& f, const OperatorParams& p,
                           double c_emp, int newton_iters, double final_residual) {
  EstimateReport r;
  r.lambda = p.lambda;
  r.mu = p.mu;
  r.norm_l2 = l2_norm(u);
  r.norm_ux = gradient_norm(u);
  r.norm_dthalf = half_time_derivative_norm(u);
  r.norm_h = h_norm(u);
  r.f_dual = dual_forcing_norm(f);
  r.f_pairing = pairing(f, u);
  r.energy_residual = std::abs(r.norm_ux * r.norm_ux - r.f_pairing / p.mu);

  const Field u2 = square_dealiased(u);
  const Field ux = space_derivative(u);
  r.cubic_residual = std::abs(l2_inner(u2, ux));
  const double l4 = l4_norm(u);
  r.norm_u_squared = l4 * l4;
  r.convection_pairing = std::abs(l2_inner(u2, space_derivative(hilbert_transform(u))));
  r.step3_lhs = r.norm_dthalf * r.norm_dthalf;
  r.step3_rhs = 0.5 * r.convection_pairing + r.f_dual * r.norm_ux;

  r.ux_bound = r.f_dual / p.mu;
  r.bound_ux_ok = r.norm_ux <= r.ux_bound * (1.0 + kGradientBoundSlack);
  r.c_emp = c_emp;
  r.dt_bound = (r.f_dual * r.f_dual / p.mu) * (c_emp / (2.0 * p.mu) * r.norm_h + 1.0);
  r.bound_dt_ok = r.step3_lhs <= r.dt_bound;
  r.newton_iters = newton_iters;
  r.final_residual = final_residual;
  return r;
}

void Branch::push(BranchEntry e) {
  sup_h_norm = std::max(sup_h_norm, e.report.norm_h);
  entries.push_back(std::move(e));
}

Field solve_linear(const DualField& f, const OperatorParams& p) {
  if (!(p.mu > 0.0)) throw InputError("mu: must be > 0");
  Field u(f.grid(), Basis::kSine);
  for (int k = -f.K(); k <= f.K(); ++k) {
    for (int m = 1; m <= f.m_max(); ++m) u.at(k, m) = f.at(k, m) / L_symbol(k, m, p.mu);
  }
  return u;
}

NewtonResult newton_solve(const DualField& f, const OperatorParams& p, const Field& u0,
                          const SolveConfig& cfg) {
  p.validate();
  cfg.validate();
  if (u0.grid() != f.grid() || u0.basis() != Basis::kSine) {
    throw InputError("newton_solve: initial guess must be a sine field on the forcing grid");
  }
  NewtonResult out;
  Field u = u0;
  Residual res = residual(u, f, p);
  for (int it = 0;; ++it) {
    out.residual_history.push_back(res.norm);
    if (!std::isfinite(res.norm)) break;
    if (res.norm <= cfg.newton_tol) {
      out.report = make_report(u, f, p, cfg.c_emp, it, res.norm);
      out.u = std::move(u);
      return out;
    }
    if (it == cfg.max_newton) break;

    // Solve J delta = -r as (J L^{-1}) y = -r, delta = L^{-1} y.
    const Linearization jac(u, p);
    const OperatorParams lin{p.mu, 0.0};
    const std::function<DualField(const DualField&)> op = [&](const DualField& y) {
      return jac.apply(solve_linear(y, lin));
    };
    const std::function<double(const DualField&, const DualField&)> dot = dual_dot;
    DualField rhs = res.r;
    rhs *= -1.0;
    DualField y;
    const auto kr = detail::gmres<DualField>(op, dot, rhs, y, cfg.krylov_tol,
                                             cfg.krylov_max, cfg.krylov_restart);
    out.krylov_iterations.push_back(kr.iterations);
    if (!std::isfinite(kr.relative_residual) || (!kr.converged && kr.relative_residual > 0.5)) {
      throw LinearSolveError("GMRES failed: relative residual " +
                             std::to_string(kr.relative_residual) + " after " +
                             std::to_string(kr.iterations) + " iterations");
    }
    const Field delta = solve_linear(y, lin);

    // Backtracking on the residual norm.
    double step = 1.0;
    Field trial = u;
    trial.axpy(step, delta);
    Residual trial_res = residual(trial, f, p);
    for (int halvings = 0; halvings < 8 && !(trial_res.norm < res.norm); ++halvings) {
      step *= 0.5;
      trial = u;
      trial.axpy(step, delta);
      trial_res = residual(trial, f, p);
    }
    u = std::move(trial);
    res = std::move(trial_res);
  }
  throw NonconvergenceError("Newton did not reach tolerance " + std::to_string(cfg.newton_tol) +
                                " at lambda = " + std::to_string(p.lambda),
                            out.residual_history, p.lambda);
}

Branch continuation_solve(const DualField& f, double mu, const SolveConfig& cfg) {
  cfg.validate();
  Branch branch;
  const GridSpec& grid = f.grid();

  auto solve_at = [&](double lambda) {
    const Field guess = predict(branch, lambda, cfg.continuation, grid);
    NewtonResult r = newton_solve(f, OperatorParams{mu, lambda}, guess, cfg);
    BranchEntry e{lambda, std::move(r.u), r.report};
    if (!e.report.bound_ux_ok) {
      branch.push(e);
      throw EstimateViolation("gradient bound violated at lambda = " + std::to_string(lambda),
                              branch);
    }
    branch.push(std::move(e));
  };

  for (std::size_t i = 0; i < cfg.lambda_grid.size(); ++i) {
    const double lambda = cfg.lambda_grid[i];
    try {
      solve_at(lambda);
    } catch (NonconvergenceError& first) {
      if (i == 0) {
        first.attach_branch(branch);
        throw;
      }
      // Bisect the step once, then give up.
      try {
        solve_at(0.5 * (cfg.lambda_grid[i - 1] + lambda));
        solve_at(lambda);
      } catch (NonconvergenceError& second) {
        second.attach_branch(branch);
        throw;
      }
    }
  }
  return branch;
}

std::optional<double> quadratic_convergence_constant(const std::vector<double>& history,
                                                     double floor) {
  std::optional<double> worst;
  const std::size_t n = history.size();
  for (std::size_t i = n >= 3 ? n - 3 : 0; i + 1 < n; ++i) {
    const double rn = history[i];
    const double rn1 = history[i + 1];
    if (rn > 1e-4 || rn1 <= floor || rn <= 0.0) continue;
    const double c = rn1 / (rn * rn);
    worst = worst ? std::max(*worst, c) : c;
  }
  return worst;
}

}  // namespace pburgers
