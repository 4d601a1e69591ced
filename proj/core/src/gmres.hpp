#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "pburgers/field.hpp"

namespace pburgers::detail {

struct GmresResult {
  int iterations = 0;
  double relative_residual = 0.0;
  bool converged = false;
};

// Restarted GMRES with real coefficients on Hermitian coefficient arrays.
// Real-valued Gram-Schmidt keeps every iterate exactly Hermitian. `op` maps
// y -> B y; `dot` is the inner product whose norm is minimized.
template <typename Vec>
GmresResult gmres(const std::function<Vec(const Vec&)>& op,
                  const std::function<double(const Vec&, const Vec&)>& dot,
                  const Vec& b, Vec& y, double rel_tol, int max_iter, int restart) {
  GmresResult result;
  const double bnorm = std::sqrt(dot(b, b));
  if (bnorm == 0.0) {
    y = b;
    y *= 0.0;
    result.converged = true;
    return result;
  }
  y = b;
  y *= 0.0;
  Vec r = b;
  while (result.iterations < max_iter) {
    const double beta = std::sqrt(dot(r, r));
    result.relative_residual = beta / bnorm;
    if (result.relative_residual <= rel_tol) {
      result.converged = true;
      return result;
    }
    const int m = std::min(restart, max_iter - result.iterations);
    std::vector<Vec> v;
    v.reserve(m + 1);
    v.push_back(r);
    v.back() *= 1.0 / beta;
    std::vector<std::vector<double>> h(m + 1, std::vector<double>(m, 0.0));
    std::vector<double> cs(m, 0.0), sn(m, 0.0), g(m + 1, 0.0);
    g[0] = beta;
    int j = 0;
    for (; j < m; ++j) {
      Vec w = op(v[j]);
      ++result.iterations;
      // Modified Gram-Schmidt, two passes.
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) {
          const double hij = dot(w, v[i]);
          h[i][j] += hij;
          w.axpy(-hij, v[i]);
        }
      }
      const double hn = std::sqrt(dot(w, w));
      h[j + 1][j] = hn;
      for (int i = 0; i < j; ++i) {
        const double t = cs[i] * h[i][j] + sn[i] * h[i + 1][j];
        h[i + 1][j] = -sn[i] * h[i][j] + cs[i] * h[i + 1][j];
        h[i][j] = t;
      }
      const double denom = std::hypot(h[j][j], h[j + 1][j]);
      cs[j] = denom == 0.0 ? 1.0 : h[j][j] / denom;
      sn[j] = denom == 0.0 ? 0.0 : h[j + 1][j] / denom;
      h[j][j] = denom;
      h[j + 1][j] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      result.relative_residual = std::abs(g[j + 1]) / bnorm;
      const bool breakdown = hn <= 1e-300;
      if (!breakdown) {
        v.push_back(w);
        v.back() *= 1.0 / hn;
      }
      if (result.relative_residual <= rel_tol || breakdown) {
        ++j;
        break;
      }
    }
    // Back substitution for the least-squares coefficients.
    std::vector<double> c(j, 0.0);
    for (int i = j - 1; i >= 0; --i) {
      double acc = g[i];
      for (int l = i + 1; l < j; ++l) acc -= h[i][l] * c[l];
      c[i] = h[i][i] == 0.0 ? 0.0 : acc / h[i][i];
    }
    for (int i = 0; i < j; ++i) y.axpy(c[i], v[i]);
    r = b;
    r.axpy(-1.0, op(y));
    const double rn = std::sqrt(dot(r, r));
    result.relative_residual = rn / bnorm;
    if (rn / bnorm <= rel_tol) {
      result.converged = true;
      return result;
    }
    if (j < m && result.relative_residual > rel_tol) {
      // Breakdown without convergence: the Krylov space is exhausted.
      return result;
    }
  }
  return result;
}

}  // namespace pburgers::detail
