#pragma once

#include <cstddef>
#include <cstdint>

#include "mintest/boolean_matrix.hpp"

namespace mintest {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then the
/// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB mixing steps. Same stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi] (inclusive); modulo bias is negligible for the ranges used here.
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double ones_density = 0.5;
    std::uint64_t seed = 0;
};

/// Each cell is 1 with probability ones_density; a row equal to an earlier one is redrawn.
/// Throws InputError on invalid configuration or when distinct rows cannot be drawn.
BooleanMatrix generate_matrix(const GeneratorConfig& config);

} // namespace mintest
