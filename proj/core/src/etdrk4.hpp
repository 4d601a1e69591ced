#pragma once

#include <functional>
#include <span>
#include <vector>

namespace pburgers::detail {

// Fourth-order exponential time differencing (Cox-Matthews) for
//   y' = diag(rates) y + N(y, t)
// with the phi-function coefficients evaluated by contour averaging
// (Kassam-Trefethen), which is accurate for every rate including zero.
class Etdrk4 {
 public:
  // N(y, stage, out): stage 0 = t_n, 1 = t_n + h/2, 2 = t_n + h.
  using Nonlinear = std::function<void(std::span<const double>, int, std::span<double>)>;

  Etdrk4(std::span<const double> rates, double h);

  double h() const { return h_; }
  std::size_t size() const { return e_.size(); }

  // Advances y by one step of length h.
  void step(std::span<double> y, const Nonlinear& nonlinear);

 private:
  double h_;
  std::vector<double> e_, e2_, q_, f1_, f2_, f3_;
  std::vector<double> nu_, na_, nb_, nc_, a_, b_, c_;
};

}  // namespace pburgers::detail
