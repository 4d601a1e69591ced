#include "etdrk4.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace pburgers::detail {
namespace {

constexpr int kContourPoints = 64;

}  // namespace

Etdrk4::Etdrk4(std::span<const double> rates, double h) : h_(h) {
  const std::size_t n = rates.size();
  e_.resize(n);
  e2_.resize(n);
  q_.resize(n);
  f1_.resize(n);
  f2_.resize(n);
  f3_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = h * rates[i];
    e_[i] = std::exp(z);
    e2_[i] = std::exp(0.5 * z);
    std::complex<double> q{}, f1{}, f2{}, f3{};
    for (int j = 0; j < kContourPoints; ++j) {
      const double theta = std::numbers::pi * (j + 0.5) / kContourPoints;
      const std::complex<double> r = z + std::polar(1.0, theta);
      const std::complex<double> er = std::exp(r);
      const std::complex<double> r3 = r * r * r;
      q += (std::exp(0.5 * r) - 1.0) / r;
      f1 += (-4.0 - r + er * (4.0 - 3.0 * r + r * r)) / r3;
      f2 += (2.0 + r + er * (r - 2.0)) / r3;
      f3 += (-4.0 - 3.0 * r - r * r + er * (4.0 - r)) / r3;
    }
    // Upper half circle; conjugate symmetry gives the lower half.
    q_[i] = h * q.real() / kContourPoints;
    f1_[i] = h * f1.real() / kContourPoints;
    f2_[i] = h * f2.real() / kContourPoints;
    f3_[i] = h * f3.real() / kContourPoints;
  }
  nu_.resize(n);
  na_.resize(n);
  nb_.resize(n);
  nc_.resize(n);
  a_.resize(n);
  b_.resize(n);
  c_.resize(n);
}

void Etdrk4::step(std::span<double> y, const Nonlinear& nonlinear) {
  const std::size_t n = e_.size();
  nonlinear(y, 0, nu_);
  for (std::size_t i = 0; i < n; ++i) a_[i] = e2_[i] * y[i] + q_[i] * nu_[i];
  nonlinear(a_, 1, na_);
  for (std::size_t i = 0; i < n; ++i) b_[i] = e2_[i] * y[i] + q_[i] * na_[i];
  nonlinear(b_, 1, nb_);
  for (std::size_t i = 0; i < n; ++i) {
    c_[i] = e2_[i] * a_[i] + q_[i] * (2.0 * nb_[i] - nu_[i]);
  }
  nonlinear(c_, 2, nc_);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = e_[i] * y[i] + f1_[i] * nu_[i] + 2.0 * f2_[i] * (na_[i] + nb_[i]) +
           f3_[i] * nc_[i];
  }
}

}  // namespace pburgers::detail
