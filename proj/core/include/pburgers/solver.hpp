#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pburgers/burgers_op.hpp"
#include "pburgers/field.hpp"

namespace pburgers {

enum class Predictor { kPreviousSolution, kSecant };

const char* to_string(Predictor p);

struct SolveConfig {
  double newton_tol = 1e-10;
  int max_newton = 50;
  std::vector<double> lambda_grid = uniform_lambda_grid(21);
  double krylov_tol = 1e-12;
  int krylov_max = 400;
  int krylov_restart = 100;
  Predictor continuation = Predictor::kPreviousSolution;
  // Empirical interpolation constant used by the advisory dt bound.
  double c_emp = 0.0;

  static std::vector<double> uniform_lambda_grid(int n);
  void validate() const;
};

// Every quantity of the lambda-uniform a priori estimate for one solution.
struct EstimateReport {
  double lambda = 0.0;
  double mu = 0.0;
  double norm_l2 = 0.0;
  double norm_ux = 0.0;
  double norm_dthalf = 0.0;
  double norm_h = 0.0;
  double f_dual = 0.0;
  double f_pairing = 0.0;        // <f, u>
  double energy_residual = 0.0;  // | ||u_x||^2 - <f,u>/mu |
  double cubic_residual = 0.0;   // |(u^2, u_x)|
  double norm_u_squared = 0.0;   // ||u^2||_{L2}
  double convection_pairing = 0.0;  // |(u^2, (H u)_x)|
  double step3_lhs = 0.0;        // ||D^{1/2} u||^2
  double step3_rhs = 0.0;        // 1/2 |(u^2, (Hu)_x)| + ||f||_* ||u_x||
  double ux_bound = 0.0;         // ||f||_* / mu
  bool bound_ux_ok = true;
  double c_emp = 0.0;
  double dt_bound = 0.0;         // (||f||^2/mu) (c_emp/(2 mu) ||u||_H + 1)
  bool bound_dt_ok = true;
  int newton_iters = 0;
  double final_residual = 0.0;
};

// Relative slack allowed in the gradient bound ||u_x|| <= ||f||_*/mu.
inline constexpr double kGradientBoundSlack = 1e-9;

EstimateReport make_report(const Field& u, const DualField& f, const OperatorParams& p,
                           double c_emp = 0.0, int newton_iters = 0,
                           double final_residual = 0.0);

struct BranchEntry {
  double lambda = 0.0;
  Field u;
  EstimateReport report;
};

struct Branch {
  std::vector<BranchEntry> entries;
  double sup_h_norm = 0.0;

  void push(BranchEntry e);
};

struct NewtonResult {
  Field u;
  EstimateReport report;
  std::vector<double> residual_history;
  std::vector<int> krylov_iterations;
};

class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, std::vector<double> history,
                      double lambda, std::optional<Branch> partial = std::nullopt)
      : std::runtime_error(what),
        history_(std::move(history)),
        lambda_(lambda),
        partial_(std::move(partial)) {}

  const std::vector<double>& residual_history() const { return history_; }
  double lambda() const { return lambda_; }
  const std::optional<Branch>& partial_branch() const { return partial_; }
  void attach_branch(Branch b) { partial_ = std::move(b); }

 private:
  std::vector<double> history_;
  double lambda_;
  std::optional<Branch> partial_;
};

class LinearSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A converged solution violated ||u_x|| <= ||f||_*/mu.
class EstimateViolation : public std::runtime_error {
 public:
  EstimateViolation(const std::string& what, Branch partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const Branch& partial_branch() const { return partial_; }

 private:
  Branch partial_;
};

// Exact solution of L u = f: u_{k,m} = f_{k,m} / (2 pi i k + mu (m pi)^2).
Field solve_linear(const DualField& f, const OperatorParams& p);

// Newton iteration on (L + lambda S) u = f with GMRES inner solves
// preconditioned by L^{-1}.
NewtonResult newton_solve(const DualField& f, const OperatorParams& p, const Field& u0,
                          const SolveConfig& cfg);

// Natural (or secant) continuation in lambda from 0 to 1.
Branch continuation_solve(const DualField& f, double mu, const SolveConfig& cfg);

// max r_{n+1} / r_n^2 over the final two Newton steps with r_n <= 1e-4 and
// r_{n+1} above the round-off floor; nullopt when no such step exists.
std::optional<double> quadratic_convergence_constant(const std::vector<double>& history,
                                                     double floor = 1e-13);

}  // namespace pburgers
