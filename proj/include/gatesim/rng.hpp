#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gatesim {

// Seeded random source with the distribution code spelled out by hand.
// std::mt19937_64 output is pinned by the standard, but the standard
// distributions are not, and golden trace files must not change when the
// standard library does. Not suitable for cryptography.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Unbiased integer in [0, n) via rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Box-Muller without pair caching: two uniforms per variate keeps the
    // draw sequence independent of call history.
    double gaussian(double mean, double sd) {
        double u1;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    bool coin_flip() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace gatesim
