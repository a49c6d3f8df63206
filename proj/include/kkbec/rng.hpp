#pragma once

#include <cstdint>

namespace kkbec {

/// Counter-based generator: draw k (k = 0, 1, ...) is the SplitMix64
/// finalizer applied to seed + (k + 1) * 0x9E3779B97F4A7C15. Uniform doubles
/// take the top 53 bits. Any implementation of these two lines reproduces
/// the same stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t k) const { return mix(seed_ + (k + 1) * 0x9E3779B97F4A7C15ULL); }

    std::uint64_t next_u64() { return at(counter_++); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace kkbec
