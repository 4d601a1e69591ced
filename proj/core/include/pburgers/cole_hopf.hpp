#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pburgers/field.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {

// U with U_x = u and U(t, 0) = 0, in the cosine family.
Field antiderivative_x(const Field& u);

// phi = exp(U / c), U = antiderivative_x(u), evaluated on the padded grid and
// analyzed in the cosine family. The default scale c = -2 mu is the one that
// turns u_t - mu u_xx + u u_x into the heat operator; c = 1 gives the bare
// u = phi_x / phi convention.
Field hopf_transform(const Field& u, double mu, std::optional<double> c = std::nullopt);

// u = c phi_x / phi, pointwise on the padded grid; throws DomainError
// unless phi > 0 there.
Samples inverse_transform_samples(const Field& phi, double c);

// The same ratio analyzed in the sine (Dirichlet) family. The ratio itself
// need not vanish at the boundary; this is its discrete sine projection.
Field inverse_transform(const Field& phi, double c);

// Cosine coefficients (m = 0..M) of a real function of x.
struct SpaceProfile {
  std::vector<double> coeffs;

  int M() const { return static_cast<int>(coeffs.size()) - 1; }
  static SpaceProfile constant(int M, double value = 1.0);
};

// One period of psi_t = mu psi_xx - v psi_x with Neumann boundary conditions,
// starting from psi0 at t = 0. Exact diffusion, explicit dealiased drift.
SpaceProfile period_map(const Field& v, const SpaceProfile& psi0, double mu, int steps);

struct GroundStateOptions {
  int steps = 512;             // time steps per period (>= 2K+1)
  int max_iterations = 500;
  std::optional<SpaceProfile> psi0;  // default: the constant 1
  int deflation_iterations = 200;
  double k_threshold = 1e-6;
  double phi_threshold = 1e-5;
};

struct GroundStateCertificate {
  bool K_near_zero = false;
  bool phi_near_constant = false;
  double K_residual = 0.0;         // |K|
  double phi_residual = 0.0;       // ||phi - 1||_{L2}
  double pde_residual = 0.0;       // ||phi_t - mu phi_xx + v phi_x + K phi||_{L2}
  double neumann_residual = 0.0;   // max |phi_x| at x = 0, 1
  double min_phi = 0.0;
  bool holds() const { return K_near_zero && phi_near_constant; }
};

struct GroundState {
  double K = 0.0;
  double rho = 1.0;        // Perron eigenvalue of the period map, rho = e^K
  Field phi;               // cosine family, positive, mean(phi(0, .)) = 1
  int iterations = 0;
  std::vector<double> rho_history;
  double rho2 = 0.0;       // modulus of the deflated dominant eigenvalue
  double spectral_gap = 0.0;  // rho - rho2
  GroundStateCertificate certificate;
};

class EigenNonconvergenceError : public std::runtime_error {
 public:
  EigenNonconvergenceError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  const std::vector<double>& rho_history() const { return history_; }

 private:
  std::vector<double> history_;
};

// Ground state (K, phi) of phi_t - mu phi_xx + v phi_x + K phi = 0, phi > 0,
// phi_x = 0 on the boundary, phi time-periodic, by power iteration on the
// period map: with phi = e^{-K t} psi, periodicity becomes psi(1) = e^K psi(0).
GroundState ground_state(const Field& v, double mu, double tol,
                         const GroundStateOptions& opts = {});

}  // namespace pburgers
