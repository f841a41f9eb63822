#pragma once

#include <cstdint>
#include <random>

namespace mogp {

// Every stochastic operation takes an explicit generator; runs own exactly
// one, seeded once, so results are reproducible regardless of scheduling.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

}  // namespace mogp
