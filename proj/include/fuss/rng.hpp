#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fuss {

/// Every stochastic component draws from one of these, owned by the caller.
using Rng = std::mt19937_64;

/// Uniform index in [0, n). Requires n > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Uniform real in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double uniform_unit(Rng& rng) { return uniform_real(rng, 0.0, 1.0); }

/// True with probability p.
inline bool chance(Rng& rng, double p) { return uniform_unit(rng) < p; }

}  // namespace fuss
