#pragma once

// FFTW-backed 1D transforms and the separable time x space synthesis/analysis
// built on top of them. Plans are created with FFTW_ESTIMATE on buffers owned
// by the plan, so results are bit-reproducible across runs. Plan caches are
// thread-local; plan creation is serialized because the FFTW planner is not
// thread-safe.

#include <fftw3.h>

#include <complex>
#include <span>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers::detail {

enum class SpaceKind {
  kSineForward,     // DST-II   (RODFT10)
  kSineInverse,     // DST-III  (RODFT01)
  kCosineForward,   // DCT-II   (REDFT10)
  kCosineInverse,   // DCT-III  (REDFT01)
};

class R2RPlan {
 public:
  R2RPlan(int n, SpaceKind kind);
  ~R2RPlan();
  R2RPlan(const R2RPlan&) = delete;
  R2RPlan& operator=(const R2RPlan&) = delete;

  int n() const { return n_; }
  double* in() const { return in_; }
  double* out() const { return out_; }
  void execute() const { fftw_execute(plan_); }

 private:
  int n_;
  double* in_;
  double* out_;
  fftw_plan plan_;
};

// Real-to-half-complex (forward, e^{-2 pi i jk/n}) and its inverse.
class RealFftPlan {
 public:
  explicit RealFftPlan(int n);
  ~RealFftPlan();
  RealFftPlan(const RealFftPlan&) = delete;
  RealFftPlan& operator=(const RealFftPlan&) = delete;

  int n() const { return n_; }
  int n_half() const { return n_ / 2 + 1; }
  double* real() const { return real_; }
  std::complex<double>* spectrum() const {
    return reinterpret_cast<std::complex<double>*>(spec_);
  }
  void forward() const { fftw_execute(r2c_); }
  // Destroys spectrum().
  void inverse() const { fftw_execute(c2r_); }

 private:
  int n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan r2c_;
  fftw_plan c2r_;
};

const R2RPlan& r2r_plan(int n, SpaceKind kind);
const RealFftPlan& real_fft_plan(int n);

// Values sum_m c_m b_m(x_j) on the midpoint grid of nx points (nx > M).
// `coeffs` holds real coefficients for m = m_min..M of the given basis.
void space_synthesize(std::span<const double> coeffs, Basis basis, int nx,
                      std::span<double> out);

// Discrete projection of midpoint-grid samples onto modes m_min..M, where
// M = m_min + coeffs.size() - 1; exact for band-limited data with M < nx.
void space_analyze(std::span<const double> samples, Basis basis,
                   std::span<double> coeffs);

// Samples of a coefficient array on an nt x nx grid (t-outer, row-major).
std::vector<double> to_physical(const Coefficients& c, int nt, int nx);

// Projection of nt x nx samples onto the modes of `out` (its grid and basis
// set K and M); out is overwritten and exactly Hermitian.
void from_physical(std::span<const double> samples, int nt, int nx,
                   Coefficients& out);

}  // namespace pburgers::detail
