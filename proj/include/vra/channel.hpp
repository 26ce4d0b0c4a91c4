#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vra/mobility.hpp"

namespace vra {

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

struct ChannelConfig {
    double carrier_ghz = 2.0;
    double rb_bandwidth_hz = 1e6;
    double antenna_gain_dbi = 3.0;
    double noise_figure_db = 9.0;
    double antenna_height_m = 1.5;
    double shadow_std_db = 3.0;
    double noise_power_dbm = -114.0;
    uint64_t seed = 0;

    // Receiver noise floor: thermal noise plus the 9 dB noise figure, applied
    // here exactly once. Gains are normalized by this value.
    double noise_floor_dbm() const { return noise_power_dbm + noise_figure_db; }
    double noise_floor_w() const { return dbm_to_w(noise_floor_dbm()); }
};

// WINNER+ B1 LOS path loss in dB. Distances below 3 m evaluate at the 3 m
// bumper-to-bumper floor. Throws on d_m <= 0.
double pathloss_db(double d_m, const ChannelConfig& cfg);

// Log-normal shadowing term in dB for one (transmitter, receiver) pair, drawn
// once per episode and constant within it. Deterministic given episode_seed.
double draw_shadow_db(int v, int w, const ChannelConfig& cfg, uint64_t episode_seed);

// Per-episode shadowing table for all m x n links.
struct ShadowTable {
    int m = 0, n = 0;
    std::vector<double> db;
    double at(int v, int w) const { return db[static_cast<size_t>(v) * n + w]; }
};
ShadowTable draw_shadow_table(int m, int n, const ChannelConfig& cfg, uint64_t episode_seed);

// Unit-mean exponential fast-fading power draw (Rayleigh amplitude),
// independent per (episode, slot, v, w, f).
double draw_fade_power(int v, int w, int f, int slot, const ChannelConfig& cfg,
                       uint64_t episode_seed);

// Normalized linear power gain from explicit components:
//   g = 10^((-PL + G_tx + G_rx + shadow) / 10) * fade_power / N0.
double gain_from_components(double pathloss_db_value, double shadow_db, double fade_power,
                            const ChannelConfig& cfg);

// Normalized power gains for every (transmitter, receiver, frequency-slot) at
// one time-slot.
struct ChannelTensor {
    int m = 0, n = 0, freq_count = 0;
    int slot_index = 0;
    std::vector<double> g;

    ChannelTensor() = default;
    ChannelTensor(int m_, int n_, int f_, int slot)
        : m(m_), n(n_), freq_count(f_), slot_index(slot),
          g(static_cast<size_t>(m_) * n_ * f_, 0.0) {}

    double at(int v, int w, int f) const {
        return g[(static_cast<size_t>(v) * n + w) * freq_count + f];
    }
    double& at(int v, int w, int f) {
        return g[(static_cast<size_t>(v) * n + w) * freq_count + f];
    }
};

// Full link-gain tensor for one time-slot of the given topology.
ChannelTensor draw_gains(const Topology& topo, int freq_count, const ChannelConfig& cfg,
                         const ShadowTable& shadow, uint64_t episode_seed, int slot_index);

// Debug CSV dump: "v,w,f,gain_db" rows.
void dump_gains_csv(std::ostream& os, const ChannelTensor& t);

}  // namespace vra
