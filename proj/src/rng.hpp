#pragma once

#include <cstdint>
#include <random>

namespace ivfg {

// Inclusive-range draw that stays bit-identical across standard libraries,
// unlike std::uniform_int_distribution.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

} // namespace ivfg
