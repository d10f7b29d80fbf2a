#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace frselect {

/// Seedable generator used by every randomized routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded integers are drawn by rejection rather than through
/// std::uniform_int_distribution, whose algorithm differs between standard
/// libraries, so a given (seed, stream) yields the same draws everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0)
        : engine_(mix(seed, stream)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on {0, ..., bound} inclusive.
    std::uint64_t uniform_inclusive(std::uint64_t bound) {
        if (bound == std::numeric_limits<std::uint64_t>::max()) return next();
        const std::uint64_t range = bound + 1;
        // Largest multiple of range that fits; draws at or above it are rejected.
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % range;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    // splitmix64 finalizer over (seed, stream)
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace frselect
