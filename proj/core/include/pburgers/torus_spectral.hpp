#pragma once

#include <span>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers {

// Physical samples on a grid, t-outer row-major: value(t_i, x_j) at i*nx + j.
struct Samples {
  int nt = 0;
  int nx = 0;
  std::vector<double> values;

  double operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * nx + j];
  }
};

// Forward transform from the grid's Nt x Nx quadrature samples.
Field analyze(std::span<const double> samples, const GridSpec& grid, Basis basis);

// Inverse transform onto the grid's Nt x Nx quadrature points.
Samples synthesize(const Field& u);

// Same, onto an arbitrary (finer) nt x nx grid.
Samples synthesize_on(const Field& u, int nt, int nx);

// Point evaluation u(t, x) of the spectral series.
double evaluate(const Field& u, double t, double x);

// Multiplier |2 pi k|^s e^{i sgn(k) s pi/2}. The k = 0 entry is 1 for s = 0
// and 0 for s > 0. Throws DomainError for s < 0.
Complex fractional_multiplier(int k, double s);

// D^s u; the identity for s = 0 and the classical time derivative for s = 1.
Field fractional_derivative(const Field& u, double s);

// D^s_* u: same modulus as D^s, conjugated phase.
Field fractional_derivative_adjoint(const Field& u, double s);

// Time Hilbert transform, multiplier -i sgn(k).
Field hilbert_transform(const Field& u);

// d/dx. Sine mode m maps to cosine mode m scaled by m pi; cosine mode m maps
// to sine mode m scaled by -m pi (the constant mode is annihilated).
Field space_derivative(const Field& u);

// Pointwise product evaluated on the padded grid and truncated back to the
// grid. Output basis: sine*sine and cosine*cosine give cosine, mixed gives
// sine. Exact (alias-free) for band-limited inputs.
Field multiply_dealiased(const Field& a, const Field& b);

// u^2 in the cosine family.
Field square_dealiased(const Field& u);

// L2(T x I) inner product Re (u, v). Same-basis pairs reduce to a coefficient
// sum (Parseval); mixed sine/cosine pairs use the exact space Gram matrix.
double l2_inner(const Field& u, const Field& v);
double l2_norm(const Field& u);

// Quadrature inner product of the synthesized samples on the base grid
// (same basis only); equals l2_inner for band-limited fields.
double quadrature_inner(const Field& u, const Field& v);

// Applies a time multiplier k -> m(k) to every space mode.
template <typename Multiplier>
Field apply_time_multiplier(const Field& u, Multiplier&& mult) {
  Field out(u.grid(), u.basis());
  for (int k = -u.K(); k <= u.K(); ++k) {
    const Complex factor = mult(k);
    for (int m = u.m_min(); m <= u.m_max(); ++m) out.at(k, m) = factor * u.at(k, m);
  }
  return out;
}

}  // namespace pburgers
