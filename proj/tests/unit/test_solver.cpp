#include <gtest/gtest.h>

#include <cmath>

#include "oracles/quadrature.hpp"
#include "oracles/steady_bvp.hpp"
#include "pburgers/errors.hpp"
#include "pburgers/forcing.hpp"
#include "pburgers/random.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/solver.hpp"
#include "pburgers/torus_spectral.hpp"

using namespace pburgers;
using oracle::kPi;

namespace {

const GridSpec kGrid = GridSpec::make(8, 16);

DualField bench(const std::string& name, const GridSpec& g = kGrid) {
  return build_forcing(benchmark_forcing(name), g);
}

}  // namespace

TEST(SolveConfig, DefaultsAndValidation) {
  SolveConfig c;
  EXPECT_EQ(c.newton_tol, 1e-10);
  EXPECT_EQ(c.max_newton, 50);
  ASSERT_EQ(c.lambda_grid.size(), 21u);
  EXPECT_EQ(c.lambda_grid.front(), 0.0);
  EXPECT_EQ(c.lambda_grid.back(), 1.0);
  EXPECT_EQ(c.continuation, Predictor::kPreviousSolution);
  EXPECT_NO_THROW(c.validate());
  c.lambda_grid = {0.0, 0.5, 0.5, 1.0};
  EXPECT_THROW(c.validate(), InputError);
  c.lambda_grid = {0.1, 1.0};
  EXPECT_THROW(c.validate(), InputError);
  c = SolveConfig{};
  c.newton_tol = 0.0;
  EXPECT_THROW(c.validate(), InputError);
  EXPECT_STREQ(to_string(Predictor::kSecant), "secant");
}

TEST(SolveLinear, SingleModeAndZero) {
  DualField f = DualField::zeros(kGrid);
  f.at(0, 1) = 1.0;
  const Field u = solve_linear(f, {1.0, 0.0});
  EXPECT_NEAR(u.at(0, 1).real(), 1.0 / (kPi * kPi), 1e-16);
  EXPECT_EQ(l2_norm(solve_linear(DualField::zeros(kGrid), {1.0, 0.0})), 0.0);
}

TEST(SolveLinear, OscillatoryClosedForm) {
  // f = cos(2 pi t) sin(pi x): u = A cos(2 pi t + phi) sin(pi x).
  const ForcingSpec spec{{ModalTerm{1.0, 1, 1, 0.0}}};
  const Field u = solve_linear(build_forcing(spec, kGrid), {1.0, 0.0});
  const double A = 1.0 / std::sqrt(std::pow(kPi, 4) + 4 * kPi * kPi);
  const double phi = -std::atan2(2 * kPi, kPi * kPi);
  const double err = oracle::max_pointwise(oracle::as_fn(u), [&](double t, double x) {
    return A * std::cos(2 * kPi * t + phi) * std::sin(kPi * x);
  });
  EXPECT_LT(err, 1e-15);
  // Coefficient form 1 / (2 pi i k + mu (m pi)^2) times the forcing coefficient.
  const Complex fc = 0.5 / std::sqrt(2.0);
  EXPECT_LT(std::abs(u.at(1, 1) - fc / Complex(kPi * kPi, 2 * kPi)), 1e-16);
}

TEST(NewtonSolve, LinearProblemConvergesInOneIteration) {
  const DualField f = bench("oscillatory");
  const NewtonResult r = newton_solve(f, {1.0, 0.0}, Field::zeros(kGrid), SolveConfig{});
  EXPECT_EQ(r.report.newton_iters, 1);
  EXPECT_LT(l2_norm(r.u - solve_linear(f, {1.0, 0.0})), 1e-14);
}

TEST(NewtonSolve, ZeroForcingHasZeroRoot) {
  const NewtonResult r =
      newton_solve(DualField::zeros(kGrid), {0.5, 0.7}, Field::zeros(kGrid), SolveConfig{});
  EXPECT_EQ(r.report.newton_iters, 0);
  EXPECT_EQ(l2_norm(r.u), 0.0);
}

TEST(NewtonSolve, SteadyBenchmarkMatchesShootingOracle) {
  const GridSpec g = GridSpec::make(2, 64);
  const double mu = 0.5;
  const NewtonResult r = newton_solve(bench("steady", g), {mu, 1.0},
                                      Field::zeros(g), SolveConfig{});
  const oracle::SteadyBvp bvp(mu, [](double x) { return 2.0 * std::sin(kPi * x); });
  const double dist = bvp.l2_distance([&](double x) { return evaluate(r.u, 0.0, x); });
  EXPECT_LT(dist, 1e-6);
  // Time-independent: no k != 0 content.
  for (int k = 1; k <= g.K; ++k) {
    for (int m = 1; m <= g.M; ++m) EXPECT_LT(std::abs(r.u.at(k, m)), 1e-14);
  }
}

TEST(NewtonSolve, QuadraticConvergence) {
  const DualField f = 3.0 * bench("oscillatory");
  const NewtonResult r = newton_solve(f, {0.1, 1.0}, Field::zeros(kGrid), SolveConfig{});
  ASSERT_GE(r.residual_history.size(), 3u);
  const auto c = quadratic_convergence_constant(r.residual_history);
  ASSERT_TRUE(c.has_value());
  EXPECT_LT(*c, 1e3);
}

TEST(NewtonSolve, NonconvergenceCarriesHistory) {
  SolveConfig cfg;
  cfg.max_newton = 1;
  cfg.newton_tol = 1e-30;
  try {
    newton_solve(bench("steady"), {0.25, 1.0}, Field::zeros(kGrid), cfg);
    FAIL();
  } catch (const NonconvergenceError& e) {
    EXPECT_EQ(e.residual_history().size(), 2u);
    EXPECT_EQ(e.lambda(), 1.0);
  }
}

TEST(NewtonSolve, RejectsMismatchedGuess) {
  EXPECT_THROW(newton_solve(bench("steady"), {1.0, 1.0}, Field::zeros(GridSpec::make(2, 2)),
                            SolveConfig{}),
               InputError);
}

TEST(QuadraticConstant, Bookkeeping) {
  EXPECT_FALSE(quadratic_convergence_constant({1.0, 0.5}).has_value());
  const auto c = quadratic_convergence_constant({1.0, 1e-3, 2e-6, 1e-11});
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, 2.5, 1e-12);
  // Steps landing below the floor are ignored.
  EXPECT_FALSE(quadratic_convergence_constant({1e-5, 1e-15}).has_value());
}

TEST(MakeReport, LinearSolutionAndZero) {
  const DualField f = bench("rough");
  const Field u = solve_linear(f, {1.0, 0.0});
  const EstimateReport r = make_report(u, f, {1.0, 0.0});
  EXPECT_LT(r.energy_residual, 1e-10);
  EXPECT_TRUE(r.bound_ux_ok);
  const EstimateReport z = make_report(Field::zeros(kGrid), DualField::zeros(kGrid), {1.0, 1.0});
  EXPECT_EQ(z.norm_h, 0.0);
  EXPECT_EQ(z.f_dual, 0.0);
  EXPECT_EQ(z.energy_residual, 0.0);
  EXPECT_TRUE(z.bound_ux_ok);
  EXPECT_TRUE(z.bound_dt_ok);
}

TEST(MakeReport, SelfConsistentBooleans) {
  const DualField f = bench("steady");
  const NewtonResult n = newton_solve(f, {0.5, 1.0}, Field::zeros(kGrid), SolveConfig{});
  const EstimateReport r = make_report(n.u, f, {0.5, 1.0}, 0.4);
  EXPECT_EQ(r.bound_ux_ok, r.norm_ux <= r.ux_bound * (1 + kGradientBoundSlack));
  EXPECT_EQ(r.bound_dt_ok, r.norm_dthalf * r.norm_dthalf <= r.dt_bound);
  EXPECT_NEAR(r.ux_bound, r.f_dual / 0.5, 1e-15);
  EXPECT_NEAR(r.dt_bound, r.f_dual * r.f_dual / 0.5 * (0.4 / (2 * 0.5) * r.norm_h + 1), 1e-14);
}

TEST(Continuation, ZeroForcingGivesZeroBranch) {
  const Branch b = continuation_solve(DualField::zeros(kGrid), 1.0, SolveConfig{});
  EXPECT_EQ(b.entries.size(), 21u);
  EXPECT_EQ(b.sup_h_norm, 0.0);
}

class BenchmarkSweep : public ::testing::TestWithParam<std::tuple<std::string, double>> {};

TEST_P(BenchmarkSweep, EstimatesHoldAlongBranch) {
  const auto& [name, mu] = GetParam();
  const DualField f = bench(name);
  const SolveConfig cfg;
  const Branch b = continuation_solve(f, mu, cfg);
  ASSERT_EQ(b.entries.size(), 21u);
  double sup = 0.0, prev = -1.0;
  for (const auto& e : b.entries) {
    const auto& r = e.report;
    EXPECT_GT(e.lambda, prev);
    prev = e.lambda;
    EXPECT_LE(r.final_residual, cfg.newton_tol);
    EXPECT_TRUE(r.bound_ux_ok);
    EXPECT_LE(r.norm_ux, r.f_dual / mu * (1 + 1e-9));
    EXPECT_LE(r.energy_residual, 10 * cfg.newton_tol * std::max(1.0, r.norm_ux * r.norm_ux));
    EXPECT_LE(r.step3_lhs, r.step3_rhs + 10 * cfg.newton_tol);
    EXPECT_LT(r.cubic_residual, 1e-9 * (1 + std::pow(r.norm_h, 3)));
    sup = std::max(sup, r.norm_h);
  }
  EXPECT_EQ(b.sup_h_norm, sup);
  EXPECT_TRUE(std::isfinite(b.sup_h_norm));
}

INSTANTIATE_TEST_SUITE_P(Benchmarks, BenchmarkSweep,
                         ::testing::Combine(::testing::Values("steady", "oscillatory", "rough"),
                                            ::testing::Values(1.0, 0.25)));

TEST(Continuation, SecantPredictorReachesSameEndpoint) {
  const DualField f = bench("rough");
  SolveConfig a, b;
  b.continuation = Predictor::kSecant;
  const Branch ba = continuation_solve(f, 0.25, a);
  const Branch bb = continuation_solve(f, 0.25, b);
  EXPECT_LT(l2_norm(ba.entries.back().u - bb.entries.back().u), 1e-9);
}

TEST(Continuation, NonconvergenceAttachesPartialBranch) {
  SolveConfig cfg;
  cfg.max_newton = 1;
  cfg.newton_tol = 1e-13;
  try {
    continuation_solve(10.0 * bench("steady"), 0.25, cfg);
    FAIL();
  } catch (const NonconvergenceError& e) {
    ASSERT_TRUE(e.partial_branch().has_value());
    EXPECT_GE(e.partial_branch()->entries.size(), 1u);
    EXPECT_LT(e.partial_branch()->entries.size(), 21u);
  }
}

TEST(Continuation, EntriesRespectRefinedLambdaGrid) {
  SolveConfig cfg;
  cfg.lambda_grid = {0.0, 0.3, 1.0};
  const Branch b = continuation_solve(bench("oscillatory"), 0.5, cfg);
  ASSERT_EQ(b.entries.size(), 3u);
  EXPECT_EQ(b.entries[1].lambda, 0.3);
}
