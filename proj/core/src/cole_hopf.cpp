#include "pburgers/cole_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "etdrk4.hpp"
#include "fft_plans.hpp"
#include "pburgers/errors.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Propagator of psi_t = mu psi_xx - v psi_x over one period on the cosine
// modes 0..M of v's grid. The drift v is tabulated on the padded x grid at
// every half step.
class PeriodPropagator {
 public:
  PeriodPropagator(const Field& v, double mu, int steps)
      : M_(v.grid().M), nxp_(v.grid().padded_nx()), steps_(steps), h_(1.0 / steps),
        stepper_(rates(v.grid().M, mu), 1.0 / steps) {
    if (v.basis() != Basis::kSine) throw InputError("period_map: drift must be a sine field");
    if (steps < 1) throw InputError("period_map: steps must be >= 1");
    drift_.resize(static_cast<std::size_t>(2 * steps + 1) * nxp_);
    std::vector<double> c(M_);
    double vmax = 0.0;
    for (int s = 0; s <= 2 * steps; ++s) {
      const double t = 0.5 * h_ * s;
      for (int m = 1; m <= M_; ++m) c[m - 1] = v.at(0, m).real();
      for (int k = 1; k <= v.K(); ++k) {
        const Complex e = std::polar(1.0, 2.0 * kPi * k * t);
        for (int m = 1; m <= M_; ++m) c[m - 1] += 2.0 * (v.at(k, m) * e).real();
      }
      auto row = std::span(drift_).subspan(static_cast<std::size_t>(s) * nxp_, nxp_);
      detail::space_synthesize(c, Basis::kSine, nxp_, row);
      for (const double x : row) vmax = std::max(vmax, std::abs(x));
    }
    cfl_ = h_ * vmax * M_ * kPi;
    ux_.resize(M_);
    phys_.resize(nxp_);
  }

  int steps() const { return steps_; }
  double cfl() const { return cfl_; }

  // Advances psi over one period; record(n, psi) sees psi at t = n h before
  // step n.
  template <typename Recorder>
  void propagate(std::vector<double>& psi, Recorder&& record) {
    int n = 0;
    const detail::Etdrk4::Nonlinear nonlinear = [&](std::span<const double> y, int stage,
                                                    std::span<double> out) {
      // psi_x in the sine family
      for (int m = 1; m <= M_; ++m) ux_[m - 1] = -(m * kPi) * y[m];
      detail::space_synthesize(ux_, Basis::kSine, nxp_, phys_);
      const double* v = drift_.data() + static_cast<std::size_t>(2 * n + stage) * nxp_;
      for (int j = 0; j < nxp_; ++j) phys_[j] *= -v[j];
      detail::space_analyze(phys_, Basis::kCosine, out);
    };
    for (n = 0; n < steps_; ++n) {
      record(n, psi);
      stepper_.step(psi, nonlinear);
    }
  }

  void propagate(std::vector<double>& psi) {
    propagate(psi, [](int, const std::vector<double>&) {});
  }

 private:
  static std::vector<double> rates(int M, double mu) {
    if (!(mu > 0.0)) throw InputError("mu: must be > 0");
    std::vector<double> r(M + 1);
    for (int m = 0; m <= M; ++m) r[m] = -mu * (m * kPi) * (m * kPi);
    return r;
  }

  int M_;
  int nxp_;
  int steps_;
  double h_;
  detail::Etdrk4 stepper_;
  std::vector<double> drift_;
  std::vector<double> ux_, phys_;
  double cfl_ = 0.0;
};

double normalize(std::vector<double>& x) {
  const double n = std::sqrt(dot(x, x));
  if (n > 0.0) {
    for (double& v : x) v /= n;
  }
  return n;
}

}  // namespace

Field antiderivative_x(const Field& u) {
  if (u.basis() != Basis::kSine) throw InputError("antiderivative_x: expects a sine field");
  Field U(u.grid(), Basis::kCosine);
  // a sqrt2 sin(m pi x) integrates to a sqrt2 (1 - cos(m pi x)) / (m pi)
  for (int k = -u.K(); k <= u.K(); ++k) {
    Complex mean{};
    for (int m = 1; m <= u.m_max(); ++m) {
      const Complex a = u.at(k, m) / (m * kPi);
      mean += std::numbers::sqrt2 * a;
      U.at(k, m) = -a;
    }
    U.at(k, 0) = mean;
  }
  return U;
}

Field hopf_transform(const Field& u, double mu, std::optional<double> c) {
  const double scale = c.value_or(-2.0 * mu);
  if (scale == 0.0) throw DomainError("hopf_transform: scale c must be nonzero");
  const Field U = antiderivative_x(u);
  const GridSpec& g = u.grid();
  std::vector<double> s = detail::to_physical(U, g.padded_nt(), g.padded_nx());
  for (double& x : s) x = std::exp(x / scale);
  Field phi(g, Basis::kCosine);
  detail::from_physical(s, g.padded_nt(), g.padded_nx(), phi);
  return phi;
}

Samples inverse_transform_samples(const Field& phi, double c) {
  if (phi.basis() != Basis::kCosine) {
    throw InputError("inverse_transform: phi must be a cosine (Neumann) field");
  }
  const GridSpec& g = phi.grid();
  const int nt = g.padded_nt();
  const int nx = g.padded_nx();
  const std::vector<double> p = detail::to_physical(phi, nt, nx);
  std::vector<double> px = detail::to_physical(space_derivative(phi), nt, nx);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) {
      throw DomainError("inverse_transform: phi must be positive, found " + std::to_string(p[i]));
    }
    px[i] = c * px[i] / p[i];
  }
  return Samples{nt, nx, std::move(px)};
}

Field inverse_transform(const Field& phi, double c) {
  const Samples s = inverse_transform_samples(phi, c);
  Field u(phi.grid(), Basis::kSine);
  detail::from_physical(s.values, s.nt, s.nx, u);
  return u;
}

SpaceProfile SpaceProfile::constant(int M, double value) {
  SpaceProfile p;
  p.coeffs.assign(static_cast<std::size_t>(M) + 1, 0.0);
  p.coeffs[0] = value;
  return p;
}

SpaceProfile period_map(const Field& v, const SpaceProfile& psi0, double mu, int steps) {
  if (psi0.M() != v.grid().M) throw InputError("period_map: profile and drift grids differ");
  PeriodPropagator prop(v, mu, steps);
  SpaceProfile out = psi0;
  prop.propagate(out.coeffs);
  return out;
}

GroundState ground_state(const Field& v, double mu, double tol,
                         const GroundStateOptions& opts) {
  const GridSpec& grid = v.grid();
  if (opts.steps < grid.num_time_modes()) {
    throw InputError("colehopf.steps: must be >= 2K+1 = " + std::to_string(grid.num_time_modes()));
  }
  PeriodPropagator prop(v, mu, opts.steps);
  GroundState gs;

  std::vector<double> psi =
      opts.psi0 ? opts.psi0->coeffs : SpaceProfile::constant(grid.M).coeffs;
  if (static_cast<int>(psi.size()) != grid.M + 1) {
    throw InputError("colehopf.psi0: profile size does not match the grid");
  }
  if (normalize(psi) == 0.0) throw InputError("colehopf.psi0: must not vanish");

  bool settled = false;
  double rho = 0.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    std::vector<double> w = psi;
    prop.propagate(w);
    const double next = dot(psi, w);
    gs.rho_history.push_back(next);
    normalize(w);
    psi = std::move(w);
    gs.iterations = it;
    if (it >= 2 && std::abs(next - rho) < tol) {
      rho = next;
      settled = true;
      break;
    }
    rho = next;
  }
  if (!settled || !(rho > 0.0)) {
    throw EigenNonconvergenceError("power iteration on the period map did not settle",
                                   gs.rho_history);
  }
  gs.rho = rho;
  gs.K = std::log(rho);

  // Eigenfunction along one period, phi = e^{-K t} psi, mean(phi(0,.)) = 1.
  std::vector<double> start = psi;
  const double mean0 = start[0];
  if (mean0 != 0.0) {
    for (double& c : start) c /= mean0;
  }
  const int steps = prop.steps();
  std::vector<double> record(static_cast<std::size_t>(steps) * (grid.M + 1));
  const double K = gs.K;
  std::vector<double> traj = start;
  prop.propagate(traj, [&](int n, const std::vector<double>& y) {
    const double decay = std::exp(-K * static_cast<double>(n) / steps);
    for (int m = 0; m <= grid.M; ++m) {
      record[static_cast<std::size_t>(n) * (grid.M + 1) + m] = decay * y[m];
    }
  });
  gs.phi = Field(grid, Basis::kCosine);
  const auto& plan = detail::real_fft_plan(steps);
  for (int m = 0; m <= grid.M; ++m) {
    for (int n = 0; n < steps; ++n) {
      plan.real()[n] = record[static_cast<std::size_t>(n) * (grid.M + 1) + m];
    }
    plan.forward();
    for (int k = 0; k <= grid.K; ++k) {
      const Complex c = plan.spectrum()[k] / static_cast<double>(steps);
      gs.phi.at(k, m) = k == 0 ? Complex{c.real(), 0.0} : c;
      if (k > 0) gs.phi.at(-k, m) = std::conj(c);
    }
  }

  // Deflated power iteration on the orthogonal complement of the Perron vector.
  std::vector<double> w(grid.M + 1, 0.0);
  for (int m = 1; m <= grid.M; ++m) w[m] = 1.0 / (1.0 + m);
  auto deflate = [&](std::vector<double>& x) {
    const double c = dot(psi, x);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * psi[i];
  };
  deflate(w);
  normalize(w);
  double prev = -1.0, prev2 = -1.0;
  for (int it = 0; it < opts.deflation_iterations && grid.M > 0; ++it) {
    prop.propagate(w);
    deflate(w);
    const double est = normalize(w);
    if (est == 0.0) {
      prev = 0.0;
      break;
    }
    const bool stable = prev >= 0.0 && std::abs(est - prev) <= 1e-12 + 1e-8 * est;
    prev2 = prev;
    prev = est;
    if (stable) break;
  }
  gs.rho2 = prev2 > 0.0 ? std::sqrt(prev * prev2) : std::max(prev, 0.0);
  gs.spectral_gap = gs.rho - gs.rho2;

  // Certificate.
  auto& cert = gs.certificate;
  cert.K_residual = std::abs(gs.K);
  Field one(grid, Basis::kCosine);
  one.at(0, 0) = 1.0;
  cert.phi_residual = l2_norm(gs.phi - one);
  cert.K_near_zero = cert.K_residual < opts.k_threshold;
  cert.phi_near_constant = cert.phi_residual < opts.phi_threshold;

  Field pde = apply_time_multiplier(gs.phi, [](int k) { return Complex{0.0, 2.0 * kPi * k}; });
  for (int k = -grid.K; k <= grid.K; ++k) {
    for (int m = 0; m <= grid.M; ++m) {
      pde.at(k, m) += (mu * (m * kPi) * (m * kPi) + gs.K) * gs.phi.at(k, m);
    }
  }
  pde += multiply_dealiased(v, space_derivative(gs.phi));
  cert.pde_residual = l2_norm(pde);

  const Field phix = space_derivative(gs.phi);
  double neumann = 0.0;
  for (int i = 0; i < grid.Nt; ++i) {
    neumann = std::max(neumann, std::abs(evaluate(phix, grid.t(i), 0.0)));
    neumann = std::max(neumann, std::abs(evaluate(phix, grid.t(i), 1.0)));
  }
  cert.neumann_residual = neumann;
  const Samples ps = synthesize(gs.phi);
  cert.min_phi = *std::min_element(ps.values.begin(), ps.values.end());
  return gs;
}

}  // namespace pburgers
