#include "pburgers/torus_spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft_plans.hpp"
#include "pburgers/errors.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

// cos(pi x) and sin(pi x), exact at multiples of 1/4 so that the half-order
// multipliers satisfy their algebraic identities without rounding.
void cos_sin_pi(double x, double& c, double& s) {
  const double q = 4.0 * x;
  if (q == std::round(q)) {
    static constexpr double kTable[8][2] = {
        {1.0, 0.0}, {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
        {0.0, 1.0}, {-std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
        {-1.0, 0.0}, {-std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2},
        {0.0, -1.0}, {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2}};
    const long idx = ((static_cast<long>(q) % 8) + 8) % 8;
    c = kTable[idx][0];
    s = kTable[idx][1];
    return;
  }
  c = std::cos(kPi * x);
  s = std::sin(kPi * x);
}

void require_same_grid(const Field& a, const Field& b, const char* op) {
  if (a.grid() != b.grid()) {
    throw InputError(std::string(op) + ": fields live on different grids");
  }
}

// Integral over (0,1) of sin(p pi x).
double sine_integral(int p) {
  if (p == 0 || p % 2 == 0) return 0.0;
  return 2.0 / (p * kPi);
}

// Gram entry (sqrt2 sin(a pi x), c_b) with c_0 = 1, c_b = sqrt2 cos(b pi x).
double mixed_gram(int a, int b) {
  if (b == 0) return std::numbers::sqrt2 * sine_integral(a);
  return sine_integral(a + b) + sine_integral(a - b);
}

}  // namespace

Field analyze(std::span<const double> samples, const GridSpec& grid, Basis basis) {
  grid.validate();
  if (samples.size() != static_cast<std::size_t>(grid.Nt) * grid.Nx) {
    throw InputError("analyze: expected " + std::to_string(grid.Nt) + "x" +
                     std::to_string(grid.Nx) + " samples, got " +
                     std::to_string(samples.size()));
  }
  Field u(grid, basis);
  detail::from_physical(samples, grid.Nt, grid.Nx, u);
  return u;
}

Samples synthesize(const Field& u) {
  return synthesize_on(u, u.grid().Nt, u.grid().Nx);
}

Samples synthesize_on(const Field& u, int nt, int nx) {
  return Samples{nt, nx, detail::to_physical(u, nt, nx)};
}

double evaluate(const Field& u, double t, double x) {
  double acc = 0.0;
  for (int k = -u.K(); k <= u.K(); ++k) {
    const Complex e = std::polar(1.0, 2.0 * kPi * k * t);
    for (int m = u.m_min(); m <= u.m_max(); ++m) {
      double bx = 1.0;
      if (u.basis() == Basis::kSine) {
        bx = std::numbers::sqrt2 * std::sin(m * kPi * x);
      } else if (m > 0) {
        bx = std::numbers::sqrt2 * std::cos(m * kPi * x);
      }
      acc += (u.at(k, m) * e).real() * bx;
    }
  }
  return acc;
}

Complex fractional_multiplier(int k, double s) {
  if (!(s >= 0.0)) {
    throw DomainError("fractional derivative order must be >= 0, got " + std::to_string(s));
  }
  if (s == 0.0) return {1.0, 0.0};
  if (k == 0) return {0.0, 0.0};
  const double modulus = std::pow(2.0 * kPi * std::abs(k), s);
  double c = 0.0, sn = 0.0;
  cos_sin_pi(0.5 * s, c, sn);
  return {modulus * c, (k > 0 ? 1.0 : -1.0) * modulus * sn};
}

Field fractional_derivative(const Field& u, double s) {
  fractional_multiplier(0, s);
  return apply_time_multiplier(u, [s](int k) { return fractional_multiplier(k, s); });
}

Field fractional_derivative_adjoint(const Field& u, double s) {
  fractional_multiplier(0, s);
  return apply_time_multiplier(
      u, [s](int k) { return std::conj(fractional_multiplier(k, s)); });
}

Field hilbert_transform(const Field& u) {
  return apply_time_multiplier(u, [](int k) {
    return Complex{0.0, k > 0 ? -1.0 : (k < 0 ? 1.0 : 0.0)};
  });
}

Field space_derivative(const Field& u) {
  if (u.basis() == Basis::kSine) {
    Field out(u.grid(), Basis::kCosine);
    for (int k = -u.K(); k <= u.K(); ++k) {
      for (int m = 1; m <= u.m_max(); ++m) out.at(k, m) = (m * kPi) * u.at(k, m);
    }
    return out;
  }
  Field out(u.grid(), Basis::kSine);
  for (int k = -u.K(); k <= u.K(); ++k) {
    for (int m = 1; m <= u.m_max(); ++m) out.at(k, m) = (-m * kPi) * u.at(k, m);
  }
  return out;
}

Field multiply_dealiased(const Field& a, const Field& b) {
  require_same_grid(a, b, "multiply_dealiased");
  const GridSpec& g = a.grid();
  const int nt = g.padded_nt();
  const int nx = g.padded_nx();
  std::vector<double> pa = detail::to_physical(a, nt, nx);
  const std::vector<double> pb = detail::to_physical(b, nt, nx);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  const Basis out_basis = a.basis() == b.basis() ? Basis::kCosine : Basis::kSine;
  Field out(g, out_basis);
  detail::from_physical(pa, nt, nx, out);
  return out;
}

Field square_dealiased(const Field& u) { return multiply_dealiased(u, u); }

double l2_inner(const Field& u, const Field& v) {
  require_same_grid(u, v, "l2_inner");
  if (u.basis() == v.basis()) {
    const auto ud = u.data();
    const auto vd = v.data();
    double acc = 0.0;
    for (std::size_t i = 0; i < ud.size(); ++i) acc += (ud[i] * std::conj(vd[i])).real();
    return acc;
  }
  const Field& s = u.basis() == Basis::kSine ? u : v;
  const Field& c = u.basis() == Basis::kSine ? v : u;
  double acc = 0.0;
  for (int k = -s.K(); k <= s.K(); ++k) {
    for (int a = 1; a <= s.m_max(); ++a) {
      for (int b = 0; b <= c.m_max(); ++b) {
        const double gab = mixed_gram(a, b);
        if (gab != 0.0) acc += gab * (s.at(k, a) * std::conj(c.at(k, b))).real();
      }
    }
  }
  return acc;
}

double l2_norm(const Field& u) { return std::sqrt(std::max(0.0, l2_inner(u, u))); }

double quadrature_inner(const Field& u, const Field& v) {
  require_same_grid(u, v, "quadrature_inner");
  if (u.basis() != v.basis()) {
    throw InputError("quadrature_inner: midpoint quadrature needs a common basis");
  }
  const Samples su = synthesize(u);
  const Samples sv = synthesize(v);
  double acc = 0.0;
  for (std::size_t i = 0; i < su.values.size(); ++i) acc += su.values[i] * sv.values[i];
  return acc / (static_cast<double>(su.nt) * su.nx);
}

}  // namespace pburgers
