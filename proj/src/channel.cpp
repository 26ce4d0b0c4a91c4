#include "vra/channel.hpp"

#include <ostream>
#include <stdexcept>

namespace vra {

namespace {
constexpr uint64_t kShadowStream = 0x53484144;  // "SHAD"
constexpr uint64_t kFadeStream = 0x46414445;    // "FADE"
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinDistance = 3.0;
}  // namespace

double pathloss_db(double d_m, const ChannelConfig& cfg) {
    if (d_m <= 0.0) throw std::invalid_argument("pathloss_db requires d_m > 0");
    const double d = std::max(d_m, kMinDistance);
    const double fc_ratio_db = std::log10(cfg.carrier_ghz / 5.0);
    // Breakpoint from the full antenna heights so the near segment covers the
    // short-range band; the far-segment constant uses the effective heights
    // h' = h - 1 as the B1 parameterization prescribes.
    const double d_bp = 4.0 * cfg.antenna_height_m * cfg.antenna_height_m *
                        cfg.carrier_ghz * 1e9 / kSpeedOfLight;
    if (d < d_bp) {
        return 22.7 * std::log10(d) + 41.0 + 20.0 * fc_ratio_db;
    }
    const double h_eff = cfg.antenna_height_m - 1.0;
    return 40.0 * std::log10(d) + 9.45 - 17.3 * std::log10(h_eff) -
           17.3 * std::log10(h_eff) + 2.7 * fc_ratio_db;
}

double draw_shadow_db(int v, int w, const ChannelConfig& cfg, uint64_t episode_seed) {
    Rng rng = Rng::keyed(episode_seed, kShadowStream, static_cast<uint64_t>(v),
                         static_cast<uint64_t>(w));
    return rng.normal(0.0, cfg.shadow_std_db);
}

ShadowTable draw_shadow_table(int m, int n, const ChannelConfig& cfg, uint64_t episode_seed) {
    ShadowTable table;
    table.m = m;
    table.n = n;
    table.db.resize(static_cast<size_t>(m) * n);
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            table.db[static_cast<size_t>(v) * n + w] = draw_shadow_db(v, w, cfg, episode_seed);
    return table;
}

double draw_fade_power(int v, int w, int f, int slot, const ChannelConfig& cfg,
                       uint64_t episode_seed) {
    (void)cfg;
    Rng rng = Rng::keyed(episode_seed, kFadeStream, static_cast<uint64_t>(slot),
                         static_cast<uint64_t>(v), static_cast<uint64_t>(w),
                         static_cast<uint64_t>(f));
    return rng.exponential(1.0);
}

double gain_from_components(double pathloss_db_value, double shadow_db, double fade_power,
                            const ChannelConfig& cfg) {
    const double large_scale_db = -pathloss_db_value + 2.0 * cfg.antenna_gain_dbi + shadow_db;
    return db_to_lin(large_scale_db) * fade_power / cfg.noise_floor_w();
}

ChannelTensor draw_gains(const Topology& topo, int freq_count, const ChannelConfig& cfg,
                         const ShadowTable& shadow, uint64_t episode_seed, int slot_index) {
    const int m = topo.tx_count;
    const int n = topo.rx_count;
    ChannelTensor tensor(m, n, freq_count, slot_index);
    for (int v = 0; v < m; ++v) {
        for (int w = 0; w < n; ++w) {
            const double d = distance(topo, v, m + w);
            const double pl = pathloss_db(std::max(d, 1e-3), cfg);
            const double sh = shadow.at(v, w);
            for (int f = 0; f < freq_count; ++f) {
                const double fade = draw_fade_power(v, w, f, slot_index, cfg, episode_seed);
                tensor.at(v, w, f) = gain_from_components(pl, sh, fade, cfg);
            }
        }
    }
    return tensor;
}

void dump_gains_csv(std::ostream& os, const ChannelTensor& t) {
    os << "v,w,f,gain_db\n";
    for (int v = 0; v < t.m; ++v)
        for (int w = 0; w < t.n; ++w)
            for (int f = 0; f < t.freq_count; ++f)
                os << v << ',' << w << ',' << f << ',' << lin_to_db(t.at(v, w, f)) << '\n';
}

}  // namespace vra
