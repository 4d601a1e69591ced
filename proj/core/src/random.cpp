#include "pburgers/random.hpp"

#include <cmath>
#include <numbers>

namespace pburgers {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view component) {
  // FNV-1a over the component name, then mixed with the root.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : component) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return mix64(root ^ mix64(h));
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root ^ mix64(index + 0x632be59bd9b4e019ULL));
}

double uniform_at(std::uint64_t seed, std::int64_t a, std::int64_t b, std::int64_t c) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<std::uint64_t>(a));
  h = mix64(h ^ static_cast<std::uint64_t>(b));
  h = mix64(h ^ static_cast<std::uint64_t>(c));
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

double normal_at(std::uint64_t seed, std::int64_t a, std::int64_t b, std::int64_t c) {
  // Box-Muller on two independent uniforms.
  const double u1 = uniform_at(seed, a, b, 2 * c);
  const double u2 = uniform_at(seed, a, b, 2 * c + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

template <typename Coeffs>
void fill_random(Coeffs& out, std::uint64_t seed, double decay) {
  for (int k = 0; k <= out.K(); ++k) {
    for (int m = out.m_min(); m <= out.m_max(); ++m) {
      const double w = std::pow(1.0 + k * k + m * m, -0.5 * decay);
      if (k == 0) {
        out.at(0, m) = {w * normal_at(seed, 0, m, 0), 0.0};
      } else {
        const double s = w * std::numbers::sqrt2 / 2.0;
        out.at(k, m) = {s * normal_at(seed, k, m, 0), s * normal_at(seed, k, m, 1)};
        out.at(-k, m) = std::conj(out.at(k, m));
      }
    }
  }
}

}  // namespace

Field random_field(const GridSpec& grid, std::uint64_t seed, double decay, Basis basis) {
  Field u(grid, basis);
  fill_random(u, seed, decay);
  return u;
}

DualField random_dual_field(const GridSpec& grid, std::uint64_t seed, double decay) {
  DualField f(grid);
  fill_random(f, seed, decay);
  return f;
}

}  // namespace pburgers
