#include "vra/noma.hpp"

#include <cmath>
#include <stdexcept>

namespace vra {

double interference(int v, int w, int f, const PowerProfile& profile,
                    const ChannelTensor& gains) {
    const double g_own = gains.at(v, w, f);
    double total = 0.0;
    for (int other = 0; other < profile.m; ++other) {
        if (other == v) continue;
        const double g_other = gains.at(other, w, f);
        if (g_other < g_own) total += g_other * profile.total(other, f);
    }
    return total;
}

double sinr(int v, int w, int f, Slice i, const PowerProfile& profile,
            const ChannelTensor& gains) {
    const double p = profile.at(v, i, f);
    if (p < 0.0) throw std::invalid_argument("negative transmit power");
    if (p == 0.0) return 0.0;
    const double g = gains.at(v, w, f);
    return p * g / (1.0 + interference(v, w, f, profile, gains));
}

double achievable_bits(double sinr_value, double beta_hz, double tau_s) {
    if (sinr_value < 0.0) throw std::invalid_argument("sinr must be nonnegative");
    return beta_hz * tau_s * std::log2(1.0 + sinr_value);
}

}  // namespace vra
