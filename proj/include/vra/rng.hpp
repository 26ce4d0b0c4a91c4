#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace vra {

// SplitMix64 step; also used as the mixing function for key derivation.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t x) {
    uint64_t s = x;
    return splitmix64(s);
}

// Deterministic stream keyed by an arbitrary list of integers. All stochastic
// draws in the simulator go through this so that a (seed, purpose, indices)
// tuple pins the value regardless of evaluation order.
class Rng {
public:
    Rng() : state_(0x853c49e6748fea9bULL) {}
    explicit Rng(uint64_t seed) : state_(mix64(seed ^ 0x2545f4914f6cdd1dULL)) {}

    template <typename... Keys>
    static Rng keyed(uint64_t seed, Keys... keys) {
        uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
        ((h = mix64(h ^ static_cast<uint64_t>(keys))), ...);
        return Rng(h);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t uniform_int(uint64_t n) {
        // 128-bit multiply rejection-free mapping; bias < 2^-64, irrelevant here.
        return static_cast<uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // Standard normal via Box-Muller; uses (0,1] to avoid log(0).
    double normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Exponential with the given mean, via inverse CDF on (0,1].
    double exponential(double mean) {
        double u = 1.0 - uniform();
        return -mean * std::log(u);
    }

private:
    uint64_t state_;
};

}  // namespace vra
