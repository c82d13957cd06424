#pragma once

#include <cstdint>

#include "vilenkin/group.hpp"

namespace vilenkin {

// xorshift64* (Vigna): state ^= state >> 12; state ^= state << 25;
// state ^= state >> 27; output = state * 0x2545F4914F6CDD1D (mod 2^64).
// A zero seed is replaced by 0x9E3779B97F4A7C15.  uniform() takes the top
// 53 output bits as a fraction of 2^53, so every implementation reproduces
// the same doubles from the same seed.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // [0, 1)
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // [lo, hi)
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    // [0, n), n > 0; modulo reduction (bias is irrelevant at these sizes).
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }
    // Real and imaginary parts uniform in [-1, 1).
    Complex unit_box() noexcept {
        const double re = uniform(-1.0, 1.0);
        return {re, uniform(-1.0, 1.0)};
    }

private:
    std::uint64_t state_;
};

}  // namespace vilenkin
