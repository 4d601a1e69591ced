#include "pburgers/burgers_op.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft_plans.hpp"
#include "pburgers/errors.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

void require_sine(const Field& u, const char* op) {
  if (u.basis() != Basis::kSine) {
    throw InputError(std::string(op) + ": expects a sine (Dirichlet) field");
  }
}

// (k, m) -> -scale (m pi) c_{k,m} from a cosine field into a dual field.
DualField gradient_pairing(const Field& cosine_field, double scale) {
  DualField out(cosine_field.grid());
  for (int k = -out.K(); k <= out.K(); ++k) {
    for (int m = 1; m <= out.m_max(); ++m) {
      out.at(k, m) = (-scale * m * kPi) * cosine_field.at(k, m);
    }
  }
  return out;
}

}  // namespace

void OperatorParams::validate() const {
  if (!(mu > 0.0)) throw InputError("mu: must be > 0, got " + std::to_string(mu));
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("lambda: must lie in [0, 1], got " + std::to_string(lambda));
  }
}

Complex L_symbol(int k, int m, double mu) {
  const double mp = m * kPi;
  return {mu * mp * mp, 2.0 * kPi * k};
}

DualField apply_L(const Field& u, const OperatorParams& p) {
  require_sine(u, "apply_L");
  DualField out(u.grid());
  for (int k = -u.K(); k <= u.K(); ++k) {
    for (int m = 1; m <= u.m_max(); ++m) out.at(k, m) = L_symbol(k, m, p.mu) * u.at(k, m);
  }
  return out;
}

DualField apply_S(const Field& u) {
  require_sine(u, "apply_S");
  return gradient_pairing(square_dealiased(u), 0.5);
}

Residual residual(const Field& u, const DualField& f, const OperatorParams& p) {
  if (u.grid() != f.grid()) throw InputError("residual: grid mismatch between u and f");
  DualField r = apply_L(u, p);
  if (p.lambda != 0.0) r.axpy(p.lambda, apply_S(u));
  r -= f;
  const double n = dual_forcing_norm(r);
  return {std::move(r), n};
}

DualField jacobian_apply(const Field& u, const Field& w, const OperatorParams& p) {
  return Linearization(u, p).apply(w);
}

Linearization::Linearization(const Field& u, const OperatorParams& p)
    : grid_(u.grid()), params_(p) {
  require_sine(u, "Linearization");
  if (p.lambda != 0.0) {
    u_padded_ = detail::to_physical(u, grid_.padded_nt(), grid_.padded_nx());
  }
}

DualField Linearization::apply(const Field& w) const {
  if (w.grid() != grid_) throw InputError("jacobian_apply: grid mismatch");
  DualField out = apply_L(w, params_);
  if (params_.lambda == 0.0) return out;
  const int nt = grid_.padded_nt();
  const int nx = grid_.padded_nx();
  std::vector<double> prod = detail::to_physical(w, nt, nx);
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= u_padded_[i];
  Field uw(grid_, Basis::kCosine);
  detail::from_physical(prod, nt, nx, uw);
  out.axpy(params_.lambda, gradient_pairing(uw, 1.0));
  return out;
}

Field as_field(const DualField& f) {
  Field u(f.grid(), Basis::kSine);
  std::copy(f.data().begin(), f.data().end(), u.data().begin());
  return u;
}

DualField as_dual(const Field& u) {
  require_sine(u, "as_dual");
  DualField f(u.grid());
  std::copy(u.data().begin(), u.data().end(), f.data().begin());
  return f;
}

}  // namespace pburgers
