#pragma once

#include <cstddef>

namespace pburgers {

// Discretization of T x I with T = R/Z (time) and I = (0,1) (space).
//
// Time frequencies k in [-K, K], space modes m in [1, M] (sine) or [0, M]
// (cosine). Physical samples live on t_j = j/Nt and the midpoint grid
// x_j = (j + 1/2)/Nx. Pointwise products are evaluated on a grid padded by
// `dealias` in each direction, which is alias-free for quadratic terms when
// dealias >= 3/2.
struct GridSpec {
  int K = 1;
  int M = 1;
  int Nt = 3;
  int Nx = 2;
  double dealias = 1.5;

  // Minimal resolvable grid: Nt = 2K+1, Nx = M+1.
  static GridSpec make(int K, int M, double dealias = 1.5);

  // Throws InputError when an invariant is violated.
  void validate() const;

  int num_time_modes() const { return 2 * K + 1; }
  int padded_nt() const;
  int padded_nx() const;

  // Grid with every size doubled (K, M, Nt, Nx).
  GridSpec refined() const;

  double t(int j) const { return static_cast<double>(j) / Nt; }
  double x(int j) const { return (j + 0.5) / Nx; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace pburgers
