#include "pburgers/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pburgers/errors.hpp"
#include "pburgers/random.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

template <typename Weight>
double weighted_sum(const Coefficients& u, Weight&& w) {
  double acc = 0.0;
  for (int k = -u.K(); k <= u.K(); ++k) {
    for (int m = u.m_min(); m <= u.m_max(); ++m) acc += w(k, m) * std::norm(u.at(k, m));
  }
  return acc;
}

}  // namespace

double sobolev_time_norm(const Field& u, double s) {
  if (s == 0.0) return l2_norm(u);
  return std::sqrt(weighted_sum(u, [s](int k, int) { return std::pow(1.0 + k * k, s); }));
}

double anisotropic_norm(const Field& u, double time_order, double space_order) {
  return std::sqrt(weighted_sum(u, [=](int k, int m) {
    const double mp = m * kPi;
    return std::pow(1.0 + k * k, time_order) * std::pow(1.0 + mp * mp, space_order);
  }));
}

double half_time_derivative_norm(const Field& u) {
  return std::sqrt(weighted_sum(u, [](int k, int) { return 2.0 * kPi * std::abs(k); }));
}

double gradient_norm(const Field& u) {
  return std::sqrt(weighted_sum(u, [](int, int m) { return (m * kPi) * (m * kPi); }));
}

double h_norm(const Field& u) {
  if (u.basis() != Basis::kSine) throw InputError("h_norm: expects a sine (Dirichlet) field");
  return std::sqrt(weighted_sum(u, [](int k, int m) {
    return 1.0 + 2.0 * kPi * std::abs(k) + (m * kPi) * (m * kPi);
  }));
}

double dual_forcing_norm(const DualField& f) {
  return std::sqrt(weighted_sum(f, [](int, int m) { return 1.0 / ((m * kPi) * (m * kPi)); }));
}

Field dual_norm_supremizer(const DualField& f) {
  Field v(f.grid(), Basis::kSine);
  for (int k = -f.K(); k <= f.K(); ++k) {
    for (int m = 1; m <= f.m_max(); ++m) v.at(k, m) = f.at(k, m) / ((m * kPi) * (m * kPi));
  }
  return v;
}

double l4_norm(const Field& u) {
  const GridSpec& g = u.grid();
  const Samples s = synthesize_on(u, 2 * g.Nt, 2 * g.Nx);
  double acc = 0.0;
  for (const double x : s.values) acc += (x * x) * (x * x);
  return std::pow(acc / (static_cast<double>(s.nt) * s.nx), 0.25);
}

HolderCheck holder_interpolation(const Field& u, double theta, double alpha, double beta) {
  const double lhs = weighted_sum(u, [=](int k, int m) {
    const double tk = std::abs(k) == 0 ? 0.0 : std::pow(std::abs(k), 2.0 * alpha * (1.0 - theta));
    return tk * std::pow(m * kPi, 2.0 * beta * theta);
  });
  const double time_part = weighted_sum(u, [=](int k, int) {
    return std::abs(k) == 0 ? 0.0 : std::pow(std::abs(k), 2.0 * alpha);
  });
  const double space_part =
      weighted_sum(u, [=](int, int m) { return std::pow(m * kPi, 2.0 * beta); });
  return {lhs, std::pow(time_part, 1.0 - theta) * std::pow(space_part, theta)};
}

std::optional<double> interpolation_ratio(const Field& u) {
  const double ux = gradient_norm(u);
  if (ux == 0.0) return std::nullopt;
  const double l4 = l4_norm(u);
  const double l2 = l2_norm(u);
  const double dt = half_time_derivative_norm(u);
  return (l4 * l4) / (std::sqrt(l2 * l2 + dt * dt) * ux);
}

InterpolationProbe interpolation_probe(const std::vector<Field>& fields) {
  InterpolationProbe probe;
  for (const Field& u : fields) {
    const auto r = interpolation_ratio(u);
    if (!r) {
      ++probe.skipped;
      continue;
    }
    ++probe.evaluated;
    if (*r > probe.c_emp) {
      probe.c_emp = *r;
      probe.worst = u;
    }
  }
  return probe;
}

InterpolationProbe interpolation_probe(int n_samples, const GridSpec& grid,
                                       std::uint64_t seed) {
  if (n_samples < 1) throw InputError("interpolation_probe: n_samples must be >= 1");
  InterpolationProbe probe;
  const std::uint64_t base = derive_seed(seed, "interpolation_probe");
  for (int i = 0; i < n_samples; ++i) {
    const std::uint64_t s = derive_seed(base, static_cast<std::uint64_t>(i));
    // Spectral decay exponents spread over [3, 5].
    const double decay = 3.0 + 2.0 * uniform_at(s, -1, -1, -1);
    const Field u = random_field(grid, s, decay);
    const auto r = interpolation_ratio(u);
    if (!r) {
      ++probe.skipped;
      continue;
    }
    ++probe.evaluated;
    if (*r > probe.c_emp) {
      probe.c_emp = *r;
      probe.worst = u;
    }
  }
  return probe;
}

EmbeddingNorms embedding_chain_check(const Field& u) {
  return {anisotropic_norm(u, 1.0 / 3.0, 1.0 / 3.0), l4_norm(u), h_norm(u)};
}

NormReport make_norm_report(const Field& u, std::vector<double> time_orders,
                            const DualField* f) {
  NormReport r;
  r.l2 = l2_norm(u);
  for (const double s : time_orders) {
    r.hs_time[s] = l2_norm(fractional_derivative(u, s));
  }
  r.hx = gradient_norm(u);
  r.h_space_time = h_norm(u);
  r.l4 = l4_norm(u);
  if (f != nullptr) r.dual_fnorm = dual_forcing_norm(*f);
  return r;
}

}  // namespace pburgers
