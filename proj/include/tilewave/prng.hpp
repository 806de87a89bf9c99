#pragma once

#include <cstdint>

namespace tilewave {

/// splitmix64: the draw protocol behind every seeded verifier.  Sample i of a
/// run with seed s reads from Splitmix(s ^ golden*(i+1)), so samples are
/// independent streams and parallel loops reproduce the serial sequence.
struct Splitmix {
    std::uint64_t state;

    explicit Splitmix(std::uint64_t s) : state(s) {}

    static Splitmix stream(std::uint64_t seed, std::uint64_t index) {
        return Splitmix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// 31-bit numerator for exact rational sampling over denominator 2^31.
    std::uint32_t next_u31() { return static_cast<std::uint32_t>(next() >> 33); }

    /// double in [0, 1)
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    /// double in [lo, hi)
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool next_bool() { return next() & 1; }
};

}  // namespace tilewave
