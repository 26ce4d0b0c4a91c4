#pragma once

#include <vector>

#include "vra/channel.hpp"

namespace vra {

enum class Slice : int { non_safety = 0, safety = 1 };
constexpr int kSliceCount = 2;

inline const char* slice_name(Slice s) {
    return s == Slice::non_safety ? "n" : "s";
}

// Transmit powers in watts for every (transmitter, packet, frequency-slot) at
// the current time-slot. At most one frequency per (v, packet) carries power.
struct PowerProfile {
    int m = 0, freq_count = 0;
    std::vector<double> p;

    PowerProfile() = default;
    PowerProfile(int m_, int f_)
        : m(m_), freq_count(f_), p(static_cast<size_t>(m_) * kSliceCount * f_, 0.0) {}

    double at(int v, Slice i, int f) const {
        return p[(static_cast<size_t>(v) * kSliceCount + static_cast<int>(i)) * freq_count + f];
    }
    double& at(int v, Slice i, int f) {
        return p[(static_cast<size_t>(v) * kSliceCount + static_cast<int>(i)) * freq_count + f];
    }
    // Total power of v on frequency f across both packets.
    double total(int v, int f) const {
        return at(v, Slice::non_safety, f) + at(v, Slice::safety, f);
    }
};

// SIC-ordered interference at receiver w for the link from v on frequency f:
// only transmitters with strictly weaker gain than v's link contribute;
// stronger (and equal-gain) signals are cancelled.
double interference(int v, int w, int f, const PowerProfile& profile,
                    const ChannelTensor& gains);

// sinr = p * g / (1 + I); gains are noise-normalized so the unit term is the
// noise floor.
double sinr(int v, int w, int f, Slice i, const PowerProfile& profile,
            const ChannelTensor& gains);

// Shannon bits over one RB: beta * tau * log2(1 + sinr).
double achievable_bits(double sinr_value, double beta_hz, double tau_s);

}  // namespace vra
