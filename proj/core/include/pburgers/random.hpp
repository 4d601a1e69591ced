#pragma once

#include <cstdint>
#include <string_view>

#include "pburgers/field.hpp"

namespace pburgers {

// Deterministic, counter-based randomness. Every random quantity is a pure
// function of (seed, coordinates), so results do not depend on evaluation
// order or on the grid a field is drawn on: refining a grid keeps the
// coarse-grid coefficients and only appends new ones.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::string_view component);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

// Uniform in (0, 1) and standard normal draws keyed by (seed, a, b, c).
double uniform_at(std::uint64_t seed, std::int64_t a, std::int64_t b, std::int64_t c);
double normal_at(std::uint64_t seed, std::int64_t a, std::int64_t b, std::int64_t c);

// Random real field with c_{k,m} = z_{k,m} (1 + k^2 + m^2)^{-decay/2},
// z complex standard normal (real for k = 0), exactly Hermitian.
Field random_field(const GridSpec& grid, std::uint64_t seed, double decay,
                   Basis basis = Basis::kSine);

// Same spectrum law for a dual field.
DualField random_dual_field(const GridSpec& grid, std::uint64_t seed, double decay);

}  // namespace pburgers
