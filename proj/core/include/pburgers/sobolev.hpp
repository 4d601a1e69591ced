#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers {

// sqrt(sum_{k,m} (1 + k^2)^s |u_{k,m}|^2), the H^s(T, L2(I)) norm.
double sobolev_time_norm(const Field& u, double s);

// Anisotropic norm with weights (1 + k^2)^time_order (1 + (m pi)^2)^space_order,
// i.e. the H^{a}(T, H^{b}(I)) scale.
double anisotropic_norm(const Field& u, double time_order, double space_order);

// ||D^{1/2} u||, ||u_x||, and the working-space norm
// ||u||_H = sqrt(||u||^2 + ||D^{1/2} u||^2 + ||u_x||^2) on sine fields.
double half_time_derivative_norm(const Field& u);
double gradient_norm(const Field& u);
double h_norm(const Field& u);

// Operator norm of f against the gradient seminorm:
// sup_v <f, v> / ||v_x|| = sqrt(sum |f_{k,m}|^2 / (m pi)^2).
double dual_forcing_norm(const DualField& f);

// The field attaining the supremum in dual_forcing_norm (v = f / (m pi)^2).
Field dual_norm_supremizer(const DualField& f);

// ||u||_{L4} by midpoint quadrature on a grid twice the base grid in each
// direction, which integrates u^4 exactly for band-limited u.
double l4_norm(const Field& u);

// Discrete Holder interpolation
//   sum |k|^{2 a (1-th)} (m pi)^{2 b th} |u|^2
//     <= (sum |k|^{2a} |u|^2)^{1-th} (sum (m pi)^{2b} |u|^2)^{th}.
struct HolderCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double rel_tol) const { return lhs <= rhs * (1.0 + rel_tol) + 1e-300; }
};
HolderCheck holder_interpolation(const Field& u, double theta, double alpha, double beta);

// Ratio ||u^2|| / (sqrt(||u||^2 + ||D^{1/2}u||^2) ||u_x||) bounding the
// constant of the L4 interpolation lemma from below. Empty when ||u_x|| = 0.
std::optional<double> interpolation_ratio(const Field& u);

struct InterpolationProbe {
  double c_emp = 0.0;
  Field worst;
  int evaluated = 0;
  int skipped = 0;
};

// Max interpolation_ratio over random power-law fields of varied decay.
InterpolationProbe interpolation_probe(int n_samples, const GridSpec& grid,
                                       std::uint64_t seed);

// Same probe over caller-provided fields (degenerate ones are skipped).
InterpolationProbe interpolation_probe(const std::vector<Field>& fields);

struct EmbeddingNorms {
  double h13 = 0.0;  // ||u||_{H^{1/3}(T, H^{1/3}(I))}
  double l4 = 0.0;
  double h = 0.0;
};
EmbeddingNorms embedding_chain_check(const Field& u);

struct NormReport {
  double l2 = 0.0;
  std::map<double, double> hs_time;
  double hx = 0.0;
  double h_space_time = 0.0;
  double l4 = 0.0;
  std::optional<double> dual_fnorm;
};
NormReport make_norm_report(const Field& u, std::vector<double> time_orders = {0.5, 1.0},
                            const DualField* f = nullptr);

}  // namespace pburgers
