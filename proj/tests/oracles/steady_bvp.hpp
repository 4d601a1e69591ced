#pragma once

// Steady Dirichlet problem  mu u'' = u u' - f(x),  u(0) = u(1) = 0, solved by
// RK4 shooting on u'(0) with a secant update.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

class SteadyBvp {
 public:
  SteadyBvp(double mu, std::function<double(double)> f, int n = 4000)
      : mu_(mu), f_(std::move(f)), n_(n) {
    double s0 = 0.0, s1 = 1.0;
    double r0 = shoot(s0), r1 = shoot(s1);
    for (int it = 0; it < 100 && std::abs(r1) > 1e-14; ++it) {
      const double s2 = s1 - r1 * (s1 - s0) / (r1 - r0);
      s0 = s1;
      r0 = r1;
      s1 = s2;
      r1 = shoot(s1);
    }
    if (std::abs(r1) > 1e-12) throw std::runtime_error("SteadyBvp: shooting did not converge");
    shoot(s1, &values_);
  }

  // u at node i / n.
  double node(int i) const { return values_[static_cast<std::size_t>(i)]; }
  int intervals() const { return n_; }

  // L2(I) distance to g by composite Simpson on the nodes (n even).
  double l2_distance(const std::function<double(double)>& g) const {
    double acc = 0.0;
    for (int i = 0; i <= n_; ++i) {
      const double w = (i == 0 || i == n_) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      const double d = node(i) - g(static_cast<double>(i) / n_);
      acc += w * d * d;
    }
    return std::sqrt(acc / (3.0 * n_));
  }

 private:
  using State = std::array<double, 2>;  // (u, u')

  State rhs(double x, const State& y) const { return {y[1], (y[0] * y[1] - f_(x)) / mu_}; }

  double shoot(double slope, std::vector<double>* out = nullptr) const {
    const double h = 1.0 / n_;
    State y{0.0, slope};
    if (out) out->assign(1, 0.0);
    for (int i = 0; i < n_; ++i) {
      const double x = i * h;
      const State k1 = rhs(x, y);
      const State k2 = rhs(x + h / 2, {y[0] + h / 2 * k1[0], y[1] + h / 2 * k1[1]});
      const State k3 = rhs(x + h / 2, {y[0] + h / 2 * k2[0], y[1] + h / 2 * k2[1]});
      const State k4 = rhs(x + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
      for (int c = 0; c < 2; ++c) y[c] += h / 6 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
      if (out) out->push_back(y[0]);
    }
    return y[0];
  }

  double mu_;
  std::function<double(double)> f_;
  int n_;
  std::vector<double> values_;
};

}  // namespace oracle
