#pragma once

#include <vector>

#include "pburgers/field.hpp"

namespace pburgers {

// mu > 0 is the viscosity, lambda in [0, 1] the homotopy parameter of the
// family (L + lambda S) u = f.
struct OperatorParams {
  double mu = 1.0;
  double lambda = 1.0;

  void validate() const;
};

// <L u, v> = (D^{1/2} u, D^{1/2}_* v) + mu (u_x, v_x), which is diagonal:
// (L u)_{k,m} = (2 pi i k + mu (m pi)^2) u_{k,m}.
DualField apply_L(const Field& u, const OperatorParams& p);

// Diagonal symbol of L at (k, m).
Complex L_symbol(int k, int m, double mu);

// <S(u), v> = -1/2 (u^2, v_x): S(u)_{k,m} = -1/2 (m pi) [u^2]^{cos}_{k,m}.
DualField apply_S(const Field& u);

struct Residual {
  DualField r;
  double norm = 0.0;  // ||r||_*
};

// r = L u + lambda S(u) - f and its gradient-dual norm.
Residual residual(const Field& u, const DualField& f, const OperatorParams& p);

// Action of the Frechet derivative at u on w:
// L w + lambda DS(u) w with <DS(u) w, v> = -(u w, v_x).
DualField jacobian_apply(const Field& u, const Field& w, const OperatorParams& p);

// Jacobian at a fixed u with the padded samples of u cached, for repeated
// application inside a Krylov solve.
class Linearization {
 public:
  Linearization(const Field& u, const OperatorParams& p);
  DualField apply(const Field& w) const;
  const OperatorParams& params() const { return params_; }

 private:
  GridSpec grid_;
  OperatorParams params_;
  std::vector<double> u_padded_;
};

// Converts between the two views of the same coefficient array: a dual
// field as the Riesz representative in L2 and back.
Field as_field(const DualField& f);
DualField as_dual(const Field& u);

}  // namespace pburgers
