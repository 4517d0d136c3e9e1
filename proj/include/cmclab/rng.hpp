#pragma once
#include <cstdint>

namespace cmclab {

/// Seedable 64-bit linear congruential generator.
///
/// state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// doubles drawn from the top 53 bits. Chosen so that every language
/// binding can reproduce the exact sample streams from a seed.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace cmclab
