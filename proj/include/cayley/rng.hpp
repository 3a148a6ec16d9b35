#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace cayley {

/// Uniform draw from [0, n) by rejection; mt19937_64 output is pinned by the
/// standard, so results are identical across platforms (the std distribution
/// objects are not).
inline uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded_draw: empty range");
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

}  // namespace cayley
