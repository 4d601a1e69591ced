#include "pburgers_cli/commands.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <map>

#include <fmt/format.h>

#include "pburgers/cole_hopf.hpp"
#include "pburgers/errors.hpp"
#include "pburgers/imex.hpp"
#include "pburgers/json_io.hpp"
#include "pburgers/random.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers::cli {
namespace fs = std::filesystem;

namespace {

// Thrown after a command has already written its own diagnostics.
struct CommandFailure {
  int code;
};

Json grid_json(const GridSpec& g) {
  Json j;
  j["K"] = g.K;
  j["M"] = g.M;
  j["Nt"] = g.Nt;
  j["Nx"] = g.Nx;
  j["dealias"] = g.dealias;
  return j;
}

void write_error(const fs::path& out_dir, const std::string& command, int code,
                 const std::string& kind, const std::string& message, Json details = {}) {
  Json j;
  j["command"] = command;
  j["exit_code"] = code;
  j["error"] = kind;
  j["message"] = message;
  if (!details.is_null()) j["details"] = std::move(details);
  try {
    fs::create_directories(out_dir);
    write_json_file(out_dir / "error.json", j);
  } catch (const std::exception&) {
    // The message still reaches stderr.
  }
  std::cerr << "error: " << message << '\n';
}

SolveConfig solve_config(const RunConfig& cfg) {
  SolveConfig s = cfg.solve;
  if (cfg.probe.samples > 0) {
    s.c_emp = interpolation_probe(cfg.probe.samples, cfg.grid, derive_seed(cfg.seed, "probe")).c_emp;
  }
  return s;
}

struct EndpointSolve {
  Field u;
  EstimateReport report;
  std::vector<double> residual_history;
  std::string method;
};

// lambda = 1 solve: Newton from the linear solution, then full continuation
// if that fails.
EndpointSolve solve_endpoint(const DualField& f, const RunConfig& cfg, const SolveConfig& sc) {
  const OperatorParams p{cfg.mu, 1.0};
  try {
    NewtonResult r = newton_solve(f, p, solve_linear(f, p), sc);
    return {std::move(r.u), r.report, std::move(r.residual_history), "newton"};
  } catch (const NonconvergenceError&) {
    Branch b = continuation_solve(f, cfg.mu, sc);
    BranchEntry& e = b.entries.back();
    return {std::move(e.u), e.report, {}, "continuation"};
  }
}

Json branch_json(const Branch& b, const RunConfig& cfg, bool complete) {
  Json j;
  j["mu"] = cfg.mu;
  j["grid"] = grid_json(cfg.grid);
  j["complete"] = complete;
  const Json body = to_json(b);
  j["sup_h_norm"] = body["sup_h_norm"];
  j["entries"] = body["entries"];
  return j;
}

void write_solution_report(const fs::path& out_dir, const EndpointSolve& s, const DualField& f,
                           const RunConfig& cfg) {
  write_field_csv(out_dir / "solution.csv", s.u);
  Json j = to_json(s.report);
  j["method"] = s.method;
  j["residual_history"] = s.residual_history;
  const auto q = quadratic_convergence_constant(s.residual_history);
  j["quadratic_constant"] = q ? Json(*q) : Json(nullptr);
  j["norms"] = to_json(make_norm_report(s.u, {0.5, 1.0}, &f));
  const ForcingDiagnostics d = forcing_diagnostics(f);
  j["forcing"] = Json{{"l2_sum", d.l2_sum}, {"dual_norm", d.dual_norm}};
  j["grid"] = grid_json(cfg.grid);
  write_json_file(out_dir / "report.json", j);
}

Field drift_field(const RunConfig& cfg, const DualField& f) {
  switch (cfg.colehopf.drift) {
    case DriftSource::kZero:
      return Field::zeros(cfg.grid);
    case DriftSource::kFile:
      if (!fs::exists(cfg.colehopf.file)) {
        throw InputError(fmt::format("colehopf.file: no such file '{}'",
                                     cfg.colehopf.file.string()));
      }
      return read_field_csv(cfg.colehopf.file, cfg.grid, Basis::kSine);
    case DriftSource::kSolve:
      break;
  }
  return solve_endpoint(f, cfg, solve_config(cfg)).u;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const DualField f = build_forcing(cfg.forcing, cfg.grid);
  const EndpointSolve s = solve_endpoint(f, cfg, solve_config(cfg));
  write_solution_report(out_dir, s, f, cfg);
  if (!s.report.bound_ux_ok) {
    write_error(out_dir, "solve", kInvariantFailure, "estimate_violation",
                "gradient bound ||u_x|| <= ||f||_*/mu violated at lambda = 1");
    return kInvariantFailure;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const DualField f = build_forcing(cfg.forcing, cfg.grid);
  const SolveConfig sc = solve_config(cfg);
  try {
    const Branch b = continuation_solve(f, cfg.mu, sc);
    write_json_file(out_dir / "branch.json", branch_json(b, cfg, true));
    write_field_csv(out_dir / "solution.csv", b.entries.back().u);
    return kOk;
  } catch (const NonconvergenceError& e) {
    const Branch partial = e.partial_branch().value_or(Branch{});
    write_json_file(out_dir / "branch.json", branch_json(partial, cfg, false));
    Json d;
    d["lambda"] = e.lambda();
    d["residual_history"] = e.residual_history();
    d["completed_entries"] = partial.entries.size();
    write_error(out_dir, "sweep", kNonconvergence, "nonconvergence", e.what(), d);
    throw CommandFailure{kNonconvergence};
  } catch (const EstimateViolation& e) {
    write_json_file(out_dir / "branch.json", branch_json(e.partial_branch(), cfg, false));
    write_error(out_dir, "sweep", kInvariantFailure, "estimate_violation", e.what());
    throw CommandFailure{kInvariantFailure};
  }
}

int cmd_verify(const RunConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  VerifyOptions o;
  o.grid = cfg.grid;
  o.samples = cfg.verify.samples;
  o.seed = cfg.seed;
  o.mu = cfg.mu;
  o.decay = cfg.verify.decay;
  const auto results = run_verification(o);
  Json j;
  j["seed"] = cfg.seed;
  j["grid"] = grid_json(cfg.grid);
  const Json body = to_json(results);
  j["pass"] = body["pass"];
  j["invariants"] = body["invariants"];
  write_json_file(out_dir / "verify.json", j);
  return j["pass"].get<bool>() ? kOk : kInvariantFailure;
}

int cmd_colehopf(const RunConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const DualField f = build_forcing(cfg.forcing, cfg.grid);
  const Field v = drift_field(cfg, f);
  GroundStateOptions opts;
  opts.steps = cfg.colehopf.steps;
  opts.max_iterations = cfg.colehopf.max_iterations;
  GroundState gs;
  try {
    gs = ground_state(v, cfg.mu, cfg.colehopf.tol, opts);
  } catch (const EigenNonconvergenceError& e) {
    write_error(out_dir, "colehopf", kNonconvergence, "nonconvergence", e.what(),
                Json{{"rho_history", e.rho_history()}});
    throw CommandFailure{kNonconvergence};
  }
  const double c = cfg.colehopf.c.value_or(-2.0 * cfg.mu);
  Json j = to_json(gs);
  j["mu"] = cfg.mu;
  j["c"] = c;
  j["drift_l2"] = l2_norm(v);
  j["inverse_transform_l2"] = l2_norm(inverse_transform(gs.phi, c));
  j["grid"] = grid_json(cfg.grid);
  write_json_file(out_dir / "groundstate.json", j);
  if (cfg.colehopf.write_phi) write_field_csv(out_dir / "phi.csv", gs.phi);
  if (!gs.certificate.holds()) {
    write_error(out_dir, "colehopf", kCertificateFailure, "certificate_failure",
                fmt::format("certificate fails: |K| = {:.3e}, ||phi - 1|| = {:.3e}",
                            gs.certificate.K_residual, gs.certificate.phi_residual));
    return kCertificateFailure;
  }
  return kOk;
}

int cmd_oracle_compare(const RunConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const DualField f = build_forcing(cfg.forcing, cfg.grid);
  const EndpointSolve s = solve_endpoint(f, cfg, solve_config(cfg));
  OracleOptions oo;
  oo.drift_tol = cfg.oracle.drift_tol;
  oo.cfl_limit = cfg.oracle.cfl_limit;
  OracleResult r;
  try {
    r = imex_oracle(f, cfg.mu, Field::zeros(cfg.grid), cfg.oracle.n_periods,
                    cfg.oracle.steps_per_period, oo);
  } catch (const OracleInstabilityError& e) {
    write_error(out_dir, "oracle-compare", kOracleInstability, "oracle_instability", e.what(),
                Json{{"cfl", e.cfl()},
                     {"cfl_limit", cfg.oracle.cfl_limit},
                     {"period", e.period()},
                     {"steps_per_period", cfg.oracle.steps_per_period}});
    throw CommandFailure{kOracleInstability};
  }
  const Field err = r.u - s.u;
  const double discrepancy = l2_norm(err);
  // Error energy per |k| (summed over m) and per m (summed over k).
  std::vector<double> by_k(static_cast<std::size_t>(cfg.grid.K) + 1, 0.0);
  std::vector<double> by_m(static_cast<std::size_t>(cfg.grid.M), 0.0);
  for (int k = -cfg.grid.K; k <= cfg.grid.K; ++k) {
    for (int m = 1; m <= cfg.grid.M; ++m) {
      const double e2 = std::norm(err.at(k, m));
      by_k[static_cast<std::size_t>(std::abs(k))] += e2;
      by_m[static_cast<std::size_t>(m - 1)] += e2;
    }
  }
  for (double& v : by_k) v = std::sqrt(v);
  for (double& v : by_m) v = std::sqrt(v);
  const bool pass = r.converged && discrepancy < cfg.oracle.threshold;

  Json j;
  j["mu"] = cfg.mu;
  j["grid"] = grid_json(cfg.grid);
  j["discrepancy"] = discrepancy;
  j["threshold"] = cfg.oracle.threshold;
  j["pass"] = pass;
  j["newton_final_residual"] = s.report.final_residual;
  j["continuation_norm_l2"] = l2_norm(s.u);
  j["oracle_norm_l2"] = l2_norm(r.u);
  j["oracle"] = Json{{"periods", r.periods},
                     {"steps_per_period", r.steps_per_period},
                     {"drift", r.drift},
                     {"converged", r.converged},
                     {"max_cfl", r.max_cfl},
                     {"drift_history", r.drift_history}};
  j["error_by_time_frequency"] = by_k;
  j["error_by_space_mode"] = by_m;
  write_json_file(out_dir / "compare.json", j);
  if (!pass) {
    write_error(out_dir, "oracle-compare", kInvariantFailure, "discrepancy",
                r.converged ? fmt::format("discrepancy {:.3e} exceeds threshold {:.3e}",
                                          discrepancy, cfg.oracle.threshold)
                            : fmt::format("oracle did not reach a periodic orbit in {} periods "
                                          "(drift {:.3e})",
                                          r.periods, r.drift));
    return kInvariantFailure;
  }
  return kOk;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"solve", "sweep", "verify", "colehopf",
                                                 "oracle-compare"};
  return names;
}

int run_command(const std::string& name, const fs::path& config_path, const fs::path& out_dir) {
  static const std::map<std::string, std::function<int(const RunConfig&, const fs::path&)>>
      table = {{"solve", cmd_solve},
               {"sweep", cmd_sweep},
               {"verify", cmd_verify},
               {"colehopf", cmd_colehopf},
               {"oracle-compare", cmd_oracle_compare}};
  const auto it = table.find(name);
  if (it == table.end()) {
    write_error(out_dir, name, kInputError, "input_error", "unknown command '" + name + "'");
    return kInputError;
  }
  try {
    const RunConfig cfg = load_config(config_path);
    return it->second(cfg, out_dir);
  } catch (const CommandFailure& f) {
    return f.code;
  } catch (const InputError& e) {
    write_error(out_dir, name, kInputError, "input_error", e.what());
    return kInputError;
  } catch (const DomainError& e) {
    write_error(out_dir, name, kInputError, "domain_error", e.what());
    return kInputError;
  } catch (const NonconvergenceError& e) {
    write_error(out_dir, name, kNonconvergence, "nonconvergence", e.what(),
                Json{{"lambda", e.lambda()}, {"residual_history", e.residual_history()}});
    return kNonconvergence;
  } catch (const LinearSolveError& e) {
    write_error(out_dir, name, kNonconvergence, "linear_solve", e.what());
    return kNonconvergence;
  } catch (const EstimateViolation& e) {
    write_error(out_dir, name, kInvariantFailure, "estimate_violation", e.what());
    return kInvariantFailure;
  } catch (const OracleInstabilityError& e) {
    write_error(out_dir, name, kOracleInstability, "oracle_instability", e.what());
    return kOracleInstability;
  } catch (const EigenNonconvergenceError& e) {
    write_error(out_dir, name, kNonconvergence, "nonconvergence", e.what());
    return kNonconvergence;
  } catch (const fs::filesystem_error& e) {
    write_error(out_dir, name, kInputError, "io_error", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    write_error(out_dir, name, kInvariantFailure, "internal_error", e.what());
    return kInvariantFailure;
  }
}

}  // namespace pburgers::cli
