#include "pburgers/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pburgers/burgers_op.hpp"
#include "pburgers/random.hpp"
#include "pburgers/sobolev.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {
namespace {

// Running maximum of one invariant's residual over an ensemble.
class Tracker {
 public:
  Tracker(std::string module, std::string name, double tol)
      : result_{std::move(module), std::move(name), 0, 0.0, tol, false} {}

  void add(double residual) {
    if (std::isnan(residual)) residual = INFINITY;
    result_.max_residual = std::max(result_.max_residual, residual);
  }
  void count() { ++result_.samples; }

  InvariantResult finish() {
    result_.pass = result_.max_residual <= result_.tolerance;
    return result_;
  }

 private:
  InvariantResult result_;
};

double rel(double err, double scale) { return std::abs(err) / std::max(1.0, std::abs(scale)); }

double field_diff(const Field& a, const Field& b) {
  return rel(l2_norm(a - b), l2_norm(b));
}

Field unit_field(const VerifyOptions& o, std::uint64_t seed, Basis basis = Basis::kSine) {
  Field u = random_field(o.grid, seed, o.decay, basis);
  const double n = l2_norm(u);
  if (n > 0.0) u *= 1.0 / n;
  return u;
}

std::uint64_t sample_seed(const VerifyOptions& o, const char* component, int i) {
  return derive_seed(derive_seed(o.seed, component), static_cast<std::uint64_t>(i));
}

}  // namespace

std::vector<InvariantResult> verify_torus_spectral(const VerifyOptions& o) {
  const char* mod = "torus_spectral";
  Tracker composition(mod, "composition D^t D^s = D^(s+t)", 1e-12);
  Tracker adjoint(mod, "adjointness <D^s u, v> = <u, D^s_* v>", 1e-12);
  Tracker factor(mod, "factorization D^(1/2)_* = H D^(1/2) = D^(1/2) H", 1e-12);
  Tracker pairing_id(mod, "<D^(1/2) u, D^(1/2)_* H u> = -||D^(1/2) u||^2", 1e-12);
  Tracker hilbert_skew(mod, "Re <u, H u> = 0", 1e-12);
  Tracker half_skew(mod, "<D^(1/2) u, D^(1/2)_* u> = 0", 1e-12);
  Tracker hermitian(mod, "Hermitian symmetry preserved", 1e-14);
  Tracker parseval(mod, "Parseval: quadrature = coefficient inner product", 1e-12);
  Tracker parts(mod, "integration by parts (u_x, w) = -(u, w_x)", 1e-12);
  Tracker roundtrip(mod, "analyze(synthesize(u)) = u", 1e-12);

  const double orders[] = {0.25, 0.5, 1.0};
  for (int i = 0; i < o.samples; ++i) {
    const Field u = unit_field(o, sample_seed(o, "torus_spectral.u", i));
    const Field v = unit_field(o, sample_seed(o, "torus_spectral.v", i));
    const Field w = unit_field(o, sample_seed(o, "torus_spectral.w", i), Basis::kCosine);

    for (const double s : orders) {
      const Field ds = fractional_derivative(u, s);
      for (const double t : orders) {
        composition.add(field_diff(fractional_derivative(ds, t), fractional_derivative(u, s + t)));
      }
      const Field dsv = fractional_derivative_adjoint(v, s);
      adjoint.add(rel(l2_inner(ds, v) - l2_inner(u, dsv), l2_norm(ds) * l2_norm(v)));
      hermitian.add(ds.hermitian_defect());
      hermitian.add(dsv.hermitian_defect());
    }
    const Field half = fractional_derivative(u, 0.5);
    const Field half_adj = fractional_derivative_adjoint(u, 0.5);
    const Field hu = hilbert_transform(u);
    factor.add(std::max(field_diff(half_adj, hilbert_transform(half)),
                        field_diff(half_adj, fractional_derivative(hu, 0.5))));
    const double half2 = l2_inner(half, half);
    pairing_id.add(rel(l2_inner(half, fractional_derivative_adjoint(hu, 0.5)) + half2, half2));
    hilbert_skew.add(rel(l2_inner(u, hu), l2_inner(u, u)));
    half_skew.add(rel(l2_inner(half, half_adj), half2));
    hermitian.add(hu.hermitian_defect());
    const Field ux = space_derivative(u);
    hermitian.add(ux.hermitian_defect());
    hermitian.add(square_dealiased(u).hermitian_defect());
    parseval.add(std::max(rel(quadrature_inner(u, v) - l2_inner(u, v), 1.0),
                          rel(quadrature_inner(w, w) - l2_inner(w, w), l2_inner(w, w))));
    parts.add(rel(l2_inner(ux, w) + l2_inner(u, space_derivative(w)),
                  l2_norm(ux) * l2_norm(w)));
    const Samples su = synthesize(u);
    roundtrip.add(field_diff(analyze(su.values, o.grid, Basis::kSine), u));

    for (Tracker* t : {&composition, &adjoint, &factor, &pairing_id, &hilbert_skew, &half_skew,
                       &hermitian, &parseval, &parts, &roundtrip}) {
      t->count();
    }
  }
  return {composition.finish(), adjoint.finish(),   factor.finish(),  pairing_id.finish(),
          hilbert_skew.finish(), half_skew.finish(), hermitian.finish(), parseval.finish(),
          parts.finish(),        roundtrip.finish()};
}

std::vector<InvariantResult> verify_sobolev(const VerifyOptions& o) {
  const char* mod = "sobolev";
  Tracker holder(mod, "discrete Holder interpolation (theta=1/3, alpha=1/2, beta=1)", 1e-10);
  Tracker h0(mod, "sobolev_time_norm(u, 0) = ||u||_L2", 0.0);
  Tracker triangle(mod, "triangle inequality (L2, H, L4, dual)", 1e-12);
  Tracker homogeneity(mod, "absolute homogeneity (L2, H, L4, dual)", 1e-12);
  Tracker supremum(mod, "dual norm attained by the supremizer", 1e-10);
  Tracker order(mod, "||u||_L2 <= ||u||_H", 0.0);

  for (int i = 0; i < o.samples; ++i) {
    const Field u = unit_field(o, sample_seed(o, "sobolev.u", i));
    const Field v = unit_field(o, sample_seed(o, "sobolev.v", i));
    const DualField f = random_dual_field(o.grid, sample_seed(o, "sobolev.f", i), o.decay);
    const DualField g = random_dual_field(o.grid, sample_seed(o, "sobolev.g", i), o.decay);

    const HolderCheck hc = holder_interpolation(u, 1.0 / 3.0, 0.5, 1.0);
    holder.add(std::max(0.0, hc.lhs - hc.rhs) / std::max(hc.rhs, 1e-300));
    h0.add(std::abs(sobolev_time_norm(u, 0.0) - l2_norm(u)));

    const Field sum = u + v;
    const double c = -2.5;
    const Field cu = c * u;
    const std::function<double(const Field&)> norms[] = {
        [](const Field& x) { return l2_norm(x); }, [](const Field& x) { return h_norm(x); },
        [](const Field& x) { return l4_norm(x); }};
    for (const auto& n : norms) {
      const double nu = n(u), nv = n(v);
      triangle.add(std::max(0.0, n(sum) - nu - nv) / (nu + nv));
      homogeneity.add(std::abs(n(cu) - std::abs(c) * nu) / (std::abs(c) * nu));
    }
    const double nf = dual_forcing_norm(f), ng = dual_forcing_norm(g);
    triangle.add(std::max(0.0, dual_forcing_norm(f + g) - nf - ng) / (nf + ng));
    homogeneity.add(std::abs(dual_forcing_norm(c * f) - std::abs(c) * nf) / (std::abs(c) * nf));

    const Field vstar = dual_norm_supremizer(f);
    supremum.add(std::abs(pairing(f, vstar) / gradient_norm(vstar) - nf) / nf);
    order.add(std::max(0.0, l2_norm(u) - h_norm(u)));

    for (Tracker* t : {&holder, &h0, &triangle, &homogeneity, &supremum, &order}) t->count();
  }
  return {holder.finish(), h0.finish(), triangle.finish(), homogeneity.finish(),
          supremum.finish(), order.finish()};
}

std::vector<InvariantResult> verify_burgers_op(const VerifyOptions& o) {
  const char* mod = "burgers_op";
  Tracker cubic(mod, "|<S(u), u>| <= 1e-11 (1 + ||u||_H^3)", 1e-11);
  Tracker skew(mod, "Re <L u, u> = mu ||u_x||^2", 1e-12);
  Tracker hilbert_pair(mod, "<L u, H u> = -||D^(1/2) u||^2", 1e-12);
  Tracker convection(mod, "|(u^2, (Hu)_x)| <= ||u^2|| ||u_x||", 1e-12);
  Tracker s_oracle(mod, "<S(u), v> = -1/2 quadrature(u^2 v_x)", 1e-12);
  Tracker l_oracle(mod, "<L u, v> = (D^(1/2) u, D^(1/2)_* v) + mu (u_x, v_x)", 1e-12);

  const OperatorParams p{o.mu, 1.0};
  const GridSpec& g = o.grid;
  for (int i = 0; i < o.samples; ++i) {
    const Field u = unit_field(o, sample_seed(o, "burgers_op.u", i));
    const Field v = unit_field(o, sample_seed(o, "burgers_op.v", i));

    const double hu = h_norm(u);
    cubic.add(std::abs(pairing(apply_S(u), u)) / (1.0 + hu * hu * hu));
    const double ux = gradient_norm(u);
    const DualField lu = apply_L(u, p);
    skew.add(rel(pairing(lu, u) - o.mu * ux * ux, o.mu * ux * ux));
    const double dt = half_time_derivative_norm(u);
    hilbert_pair.add(rel(pairing(lu, hilbert_transform(u)) + dt * dt, dt * dt + o.mu * ux * ux));

    const Field u2 = square_dealiased(u);
    const double conv = std::abs(l2_inner(u2, space_derivative(hilbert_transform(u))));
    const double l4 = l4_norm(u);
    convection.add(std::max(0.0, conv - l4 * l4 * ux) / std::max(1.0, l4 * l4 * ux));

    // Exact midpoint quadrature of u^2 v_x on the padded grid.
    const int nt = g.padded_nt(), nx = g.padded_nx();
    const Samples su = synthesize_on(u, nt, nx);
    const Samples svx = synthesize_on(space_derivative(v), nt, nx);
    double quad = 0.0;
    for (std::size_t j = 0; j < su.values.size(); ++j) {
      quad += su.values[j] * su.values[j] * svx.values[j];
    }
    quad *= -0.5 / (static_cast<double>(nt) * nx);
    s_oracle.add(rel(pairing(apply_S(u), v) - quad, quad));

    const double defn =
        l2_inner(fractional_derivative(u, 0.5), fractional_derivative_adjoint(v, 0.5)) +
        o.mu * l2_inner(space_derivative(u), space_derivative(v));
    l_oracle.add(rel(pairing(lu, v) - defn, defn));

    for (Tracker* t : {&cubic, &skew, &hilbert_pair, &convection, &s_oracle, &l_oracle}) {
      t->count();
    }
  }
  return {cubic.finish(),    skew.finish(),     hilbert_pair.finish(),
          convection.finish(), s_oracle.finish(), l_oracle.finish()};
}

std::vector<InvariantResult> run_verification(const VerifyOptions& opts) {
  std::vector<InvariantResult> all = verify_torus_spectral(opts);
  for (auto& r : verify_sobolev(opts)) all.push_back(std::move(r));
  for (auto& r : verify_burgers_op(opts)) all.push_back(std::move(r));
  return all;
}

}  // namespace pburgers
