#include "fft_plans.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "pburgers/errors.hpp"

namespace pburgers::detail {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_r2r_kind fftw_kind(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kSineForward: return FFTW_RODFT10;
    case SpaceKind::kSineInverse: return FFTW_RODFT01;
    case SpaceKind::kCosineForward: return FFTW_REDFT10;
    case SpaceKind::kCosineInverse: return FFTW_REDFT01;
  }
  return FFTW_REDFT10;
}

constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

R2RPlan::R2RPlan(int n, SpaceKind kind) : n_(n) {
  std::lock_guard lock(planner_mutex());
  in_ = fftw_alloc_real(n);
  out_ = fftw_alloc_real(n);
  plan_ = fftw_plan_r2r_1d(n, in_, out_, fftw_kind(kind), FFTW_ESTIMATE);
}

R2RPlan::~R2RPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan_);
  fftw_free(in_);
  fftw_free(out_);
}

RealFftPlan::RealFftPlan(int n) : n_(n) {
  std::lock_guard lock(planner_mutex());
  real_ = fftw_alloc_real(n);
  spec_ = fftw_alloc_complex(n / 2 + 1);
  r2c_ = fftw_plan_dft_r2c_1d(n, real_, spec_, FFTW_ESTIMATE);
  c2r_ = fftw_plan_dft_c2r_1d(n, spec_, real_, FFTW_ESTIMATE);
}

RealFftPlan::~RealFftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(r2c_);
  fftw_destroy_plan(c2r_);
  fftw_free(real_);
  fftw_free(spec_);
}

const R2RPlan& r2r_plan(int n, SpaceKind kind) {
  thread_local std::map<std::pair<int, SpaceKind>, std::unique_ptr<R2RPlan>> cache;
  auto& slot = cache[{n, kind}];
  if (!slot) slot = std::make_unique<R2RPlan>(n, kind);
  return *slot;
}

const RealFftPlan& real_fft_plan(int n) {
  thread_local std::map<int, std::unique_ptr<RealFftPlan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RealFftPlan>(n);
  return *slot;
}

// Midpoint-grid conventions (x_j = (j + 1/2)/n):
//   DST-III: y_j = (-1)^j X_{n-1} + 2 sum_{i<n-1} X_i sin(pi (i+1)(j+1/2)/n)
//   DCT-III: y_j = X_0 + 2 sum_{i>=1} X_i cos(pi i (j+1/2)/n)
// and DST-II / DCT-II are their unnormalized transposes.
void space_synthesize(std::span<const double> coeffs, Basis basis, int nx,
                      std::span<double> out) {
  const int m_min = basis == Basis::kSine ? 1 : 0;
  const int M = m_min + static_cast<int>(coeffs.size()) - 1;
  if (M >= nx) throw InputError("space_synthesize: grid too coarse for modes");
  if (basis == Basis::kSine) {
    const auto& plan = r2r_plan(nx, SpaceKind::kSineInverse);
    double* in = plan.in();
    for (int i = 0; i < nx; ++i) in[i] = 0.0;
    for (int m = 1; m <= M; ++m) in[m - 1] = 0.5 * kSqrt2 * coeffs[m - 1];
    plan.execute();
    for (int j = 0; j < nx; ++j) out[j] = plan.out()[j];
  } else {
    const auto& plan = r2r_plan(nx, SpaceKind::kCosineInverse);
    double* in = plan.in();
    for (int i = 0; i < nx; ++i) in[i] = 0.0;
    in[0] = coeffs[0];
    for (int m = 1; m <= M; ++m) in[m] = 0.5 * kSqrt2 * coeffs[m];
    plan.execute();
    for (int j = 0; j < nx; ++j) out[j] = plan.out()[j];
  }
}

void space_analyze(std::span<const double> samples, Basis basis,
                   std::span<double> coeffs) {
  const int nx = static_cast<int>(samples.size());
  const int m_min = basis == Basis::kSine ? 1 : 0;
  const int M = m_min + static_cast<int>(coeffs.size()) - 1;
  if (M >= nx) throw InputError("space_analyze: grid too coarse for modes");
  const double inv = 1.0 / (kSqrt2 * nx);
  if (basis == Basis::kSine) {
    const auto& plan = r2r_plan(nx, SpaceKind::kSineForward);
    for (int j = 0; j < nx; ++j) plan.in()[j] = samples[j];
    plan.execute();
    for (int m = 1; m <= M; ++m) coeffs[m - 1] = plan.out()[m - 1] * inv;
  } else {
    const auto& plan = r2r_plan(nx, SpaceKind::kCosineForward);
    for (int j = 0; j < nx; ++j) plan.in()[j] = samples[j];
    plan.execute();
    coeffs[0] = plan.out()[0] / (2.0 * nx);
    for (int m = 1; m <= M; ++m) coeffs[m] = plan.out()[m] * inv;
  }
}

std::vector<double> to_physical(const Coefficients& c, int nt, int nx) {
  const int K = c.K();
  const int nm = c.num_modes_x();
  const int m_min = c.m_min();
  if (nt < 2 * K + 1 || nx <= c.m_max()) {
    throw InputError("to_physical: target grid cannot resolve the field");
  }
  // Space synthesis for k = 0..K, real and imaginary parts separately.
  std::vector<Complex> g(static_cast<std::size_t>(K + 1) * nx);
  std::vector<double> re(nm), im(nm), yre(nx), yim(nx);
  for (int k = 0; k <= K; ++k) {
    for (int m = m_min; m <= c.m_max(); ++m) {
      re[m - m_min] = c.at(k, m).real();
      im[m - m_min] = c.at(k, m).imag();
    }
    space_synthesize(re, c.basis(), nx, yre);
    if (k > 0) {
      space_synthesize(im, c.basis(), nx, yim);
    } else {
      std::fill(yim.begin(), yim.end(), 0.0);
    }
    for (int j = 0; j < nx; ++j) g[static_cast<std::size_t>(k) * nx + j] = {yre[j], yim[j]};
  }
  // Time synthesis per x column from the half spectrum.
  std::vector<double> out(static_cast<std::size_t>(nt) * nx);
  const auto& plan = real_fft_plan(nt);
  for (int j = 0; j < nx; ++j) {
    auto* spec = plan.spectrum();
    for (int k = 0; k < plan.n_half(); ++k) spec[k] = 0.0;
    for (int k = 0; k <= K; ++k) spec[k] = g[static_cast<std::size_t>(k) * nx + j];
    plan.inverse();
    for (int t = 0; t < nt; ++t) out[static_cast<std::size_t>(t) * nx + j] = plan.real()[t];
  }
  return out;
}

void from_physical(std::span<const double> samples, int nt, int nx,
                   Coefficients& out) {
  const int K = out.K();
  const int nm = out.num_modes_x();
  const int m_min = out.m_min();
  if (samples.size() != static_cast<std::size_t>(nt) * nx) {
    throw InputError("from_physical: sample count does not match nt x nx");
  }
  if (nt < 2 * K + 1 || nx <= out.m_max()) {
    throw InputError("from_physical: sample grid cannot resolve the target modes");
  }
  std::vector<Complex> g(static_cast<std::size_t>(K + 1) * nx);
  const auto& plan = real_fft_plan(nt);
  const double inv_nt = 1.0 / nt;
  for (int j = 0; j < nx; ++j) {
    for (int t = 0; t < nt; ++t) plan.real()[t] = samples[static_cast<std::size_t>(t) * nx + j];
    plan.forward();
    for (int k = 0; k <= K; ++k) g[static_cast<std::size_t>(k) * nx + j] = plan.spectrum()[k] * inv_nt;
  }
  std::vector<double> xre(nx), xim(nx), cre(nm), cim(nm);
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j < nx; ++j) {
      xre[j] = g[static_cast<std::size_t>(k) * nx + j].real();
      xim[j] = g[static_cast<std::size_t>(k) * nx + j].imag();
    }
    space_analyze(xre, out.basis(), cre);
    if (k > 0) {
      space_analyze(xim, out.basis(), cim);
    } else {
      std::fill(cim.begin(), cim.end(), 0.0);
    }
    for (int m = m_min; m <= out.m_max(); ++m) {
      out.at(k, m) = {cre[m - m_min], cim[m - m_min]};
      if (k > 0) out.at(-k, m) = {cre[m - m_min], -cim[m - m_min]};
    }
  }
}

}  // namespace pburgers::detail
