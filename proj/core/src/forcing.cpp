#include "pburgers/forcing.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <type_traits>

#include "pburgers/errors.hpp"
#include "pburgers/random.hpp"
#include "pburgers/sobolev.hpp"

namespace pburgers {
namespace {

constexpr double kPi = std::numbers::pi;

void add_modal(const ModalTerm& term, DualField& f) {
  if (term.k < 0 || term.m < 1) {
    throw InputError("forcing.modal: need k >= 0 and m >= 1");
  }
  if (term.k > f.K() || term.m > f.m_max()) return;  // not resolved on this grid
  // sin(m pi x) = e_m / sqrt2 in the orthonormal basis
  const double a = term.a / std::numbers::sqrt2;
  if (term.k == 0) {
    f.at(0, term.m) += a * std::cos(term.phase);
  } else {
    const Complex c = 0.5 * a * std::polar(1.0, term.phase);
    f.at(term.k, term.m) += c;
    f.at(-term.k, term.m) += std::conj(c);
  }
}

void add_rough(const RoughTerm& term, DualField& f) {
  const int kmax = term.cutoff > 0 ? std::min(term.cutoff, f.K()) : f.K();
  const int mmax = term.cutoff > 0 ? std::min(term.cutoff, f.m_max()) : f.m_max();
  for (int k = 0; k <= kmax; ++k) {
    for (int m = 1; m <= mmax; ++m) {
      const double w = term.amplitude * std::pow(1.0 + k * k + m * m, -0.5 * term.p);
      Complex g;
      if (k == 0) {
        g = {w * normal_at(term.seed, 0, m, 0), 0.0};
      } else {
        const double s = w / std::numbers::sqrt2;
        g = {s * normal_at(term.seed, k, m, 0), s * normal_at(term.seed, k, m, 1)};
      }
      // d/dx of g_m sqrt2 cos(m pi x) is -m pi g_m sqrt2 sin(m pi x)
      const Complex c = -(m * kPi) * g;
      f.at(k, m) += c;
      if (k > 0) f.at(-k, m) += std::conj(c);
    }
  }
}

}  // namespace

DualField build_forcing(const ForcingSpec& spec, const GridSpec& grid) {
  DualField f(grid);
  for (const auto& term : spec.terms) {
    std::visit(
        [&f](const auto& t) {
          if constexpr (std::is_same_v<std::decay_t<decltype(t)>, ModalTerm>) {
            add_modal(t, f);
          } else {
            add_rough(t, f);
          }
        },
        term);
  }
  return f;
}

ForcingDiagnostics forcing_diagnostics(const DualField& f) {
  double l2 = 0.0;
  for (const auto& c : f.data()) l2 += std::norm(c);
  return {l2, dual_forcing_norm(f)};
}

ForcingSpec benchmark_forcing(const std::string& name) {
  if (name == "steady") return {{ModalTerm{2.0, 0, 1, 0.0}}};
  if (name == "oscillatory") return {{ModalTerm{2.0, 1, 1, 0.0}}};
  if (name == "rough") return {{RoughTerm{0.5, 20240917, 16, 0.1}}};
  if (name == "zero") return {};
  throw InputError("forcing.benchmark: unknown benchmark '" + name + "'");
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"steady", "oscillatory", "rough"};
  return names;
}

}  // namespace pburgers
