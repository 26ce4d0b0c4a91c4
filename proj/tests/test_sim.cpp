#include "doctest.h"

#include <cmath>
#include <set>

#include "stat_tests.hpp"
#include "vra/channel.hpp"
#include "vra/mobility.hpp"
#include "vra/noma.hpp"

using namespace vra;

namespace {

Topology two_vehicle_topology(double x0, double y0, double x1, double y1) {
    Topology t;
    t.road_length_m = 2000.0;
    t.tx_count = 1;
    t.rx_count = 1;
    VehicleState a;
    a.id = 0;
    a.kind = VehicleKind::transmitter;
    a.position_m = x0;
    a.y_m = y0;
    VehicleState b;
    b.id = 1;
    b.kind = VehicleKind::receiver;
    b.position_m = x1;
    b.y_m = y1;
    t.vehicles = {a, b};
    return t;
}

}  // namespace

TEST_CASE("drop labels exactly m transmitters and n receivers") {
    HighwayConfig cfg;
    cfg.seed = 1;
    Topology topo = drop_vehicles(cfg, 5, 4);
    REQUIRE(topo.vehicles.size() == 9);
    int tx = 0, rx = 0;
    for (const auto& v : topo.vehicles) {
        if (v.kind == VehicleKind::transmitter) ++tx;
        else ++rx;
        CHECK(v.lane >= 0);
        CHECK(v.lane < 6);
        CHECK(v.position_m >= 0.0);
        CHECK(v.position_m < cfg.road_length_m);
        // speed matches the lane's configured speed exactly, sign included
        CHECK(v.speed_mps == cfg.lane_speed_mps(v.lane));
    }
    CHECK(tx == 5);
    CHECK(rx == 4);
}

TEST_CASE("drop is deterministic per seed") {
    HighwayConfig cfg;
    cfg.seed = 77;
    Topology a = drop_vehicles(cfg, 3, 3);
    Topology b = drop_vehicles(cfg, 3, 3);
    REQUIRE(a.vehicles.size() == b.vehicles.size());
    for (size_t i = 0; i < a.vehicles.size(); ++i) {
        CHECK(a.vehicles[i].position_m == b.vehicles[i].position_m);
        CHECK(a.vehicles[i].lane == b.vehicles[i].lane);
        CHECK(a.vehicles[i].kind == b.vehicles[i].kind);
    }
    cfg.seed = 78;
    Topology c = drop_vehicles(cfg, 3, 3);
    bool same = true;
    for (size_t i = 0; i < a.vehicles.size(); ++i)
        same = same && a.vehicles[i].position_m == c.vehicles[i].position_m;
    CHECK_FALSE(same);
}

TEST_CASE("drop fails loudly when the road cannot hold m+n vehicles") {
    HighwayConfig cfg;
    cfg.road_length_m = 20.0;
    cfg.seed = 3;
    CHECK_THROWS_WITH_AS(drop_vehicles(cfg, 50, 50), doctest::Contains("required"),
                         std::runtime_error);
}

TEST_CASE("lane speeds follow the 60+2(i-1)x10 / 100-2(i-1)x10 pattern") {
    HighwayConfig cfg;
    const double kmh = 1000.0 / 3600.0;
    CHECK(cfg.lane_speed_mps(0) == doctest::Approx(-60.0 * kmh));
    CHECK(cfg.lane_speed_mps(1) == doctest::Approx(-80.0 * kmh));
    CHECK(cfg.lane_speed_mps(2) == doctest::Approx(-100.0 * kmh));
    CHECK(cfg.lane_speed_mps(3) == doctest::Approx(100.0 * kmh));
    CHECK(cfg.lane_speed_mps(4) == doctest::Approx(80.0 * kmh));
    CHECK(cfg.lane_speed_mps(5) == doctest::Approx(60.0 * kmh));
}

TEST_CASE("per-lane gaps are exponential with mean 2.5 V") {
    HighwayConfig cfg;
    const double mean_gap = 2.5 * 60.0 * 1000.0 / 3600.0;  // 41.67 m on the 60 km/h lane

    std::vector<double> gaps;
    Rng rng(20260810);
    while (gaps.size() < 10000) {
        const std::vector<double> xs = lane_poisson_positions(cfg, 0, rng);
        for (size_t i = 1; i < xs.size(); ++i) gaps.push_back(xs[i] - xs[i - 1]);
    }
    gaps.resize(10000);
    double sum = 0.0;
    for (double g : gaps) sum += g;
    const double empirical_mean = sum / static_cast<double>(gaps.size());
    CHECK(empirical_mean == doctest::Approx(mean_gap).epsilon(0.05));

    const double p = stat_tests::ks_pvalue(
        gaps, [&](double g) { return 1.0 - std::exp(-g / mean_gap); });
    CHECK(p > 0.01);
}

TEST_CASE("advance moves linearly and wraps") {
    Topology t = two_vehicle_topology(0.0, 2.0, 1990.0, 2.0);
    t.vehicles[0].speed_mps = 16.667;
    t.vehicles[1].speed_mps = 27.78;
    Topology moved = advance(t, 1.0);
    CHECK(moved.vehicles[0].position_m == doctest::Approx(16.667));
    CHECK(moved.vehicles[1].position_m == doctest::Approx(17.78));
    CHECK(moved.time_s == doctest::Approx(1.0));
    CHECK(moved.vehicles[0].speed_mps == t.vehicles[0].speed_mps);
    CHECK_THROWS_AS(advance(t, 0.0), std::invalid_argument);
}

TEST_CASE("a 5 ms step matches the (6,4,4,20) slot length") {
    // 20 slots of 5 ms span the 100 ms horizon
    CHECK(20 * 0.005 == doctest::Approx(0.1));
    Topology t = two_vehicle_topology(0.0, 2.0, 100.0, 2.0);
    t.vehicles[0].speed_mps = -100.0 * 1000.0 / 3600.0;
    Topology moved = advance(t, 0.005);
    CHECK(moved.vehicles[0].position_m ==
          doctest::Approx(2000.0 - 100.0 / 3.6 * 0.005));
}

TEST_CASE("distance is Euclidean and symmetric") {
    Topology t = two_vehicle_topology(0.0, 0.0, 3.0, 4.0);
    CHECK(distance(t, 0, 1) == doctest::Approx(5.0));
    CHECK(distance(t, 1, 0) == doctest::Approx(5.0));
    Topology same = two_vehicle_topology(7.0, 1.0, 7.0, 1.0);
    CHECK(distance(same, 0, 1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(distance(t, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(distance(t, 0, 5), std::invalid_argument);

    HighwayConfig cfg;
    cfg.seed = 11;
    Topology topo = drop_vehicles(cfg, 4, 4);
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            CHECK(distance(topo, a, b) == doctest::Approx(distance(topo, b, a)));
}

TEST_CASE("trajectories are deterministic per config") {
    HighwayConfig cfg;
    cfg.seed = 5;
    Topology a = advance(advance(drop_vehicles(cfg, 2, 2), 0.02), 0.02);
    Topology b = advance(advance(drop_vehicles(cfg, 2, 2), 0.02), 0.02);
    for (size_t i = 0; i < a.vehicles.size(); ++i)
        CHECK(a.vehicles[i].position_m == b.vehicles[i].position_m);
}

TEST_CASE("snapshot lists one line per vehicle") {
    HighwayConfig cfg;
    cfg.seed = 2;
    Topology topo = drop_vehicles(cfg, 2, 3);
    const std::string snap = to_snapshot(topo);
    CHECK(std::count(snap.begin(), snap.end(), '\n') == 5);
    CHECK(snap.find("tx") != std::string::npos);
    CHECK(snap.find("rx") != std::string::npos);
}

// ---------------------------------------------------------------------------
// channel

TEST_CASE("pathloss matches the near-segment closed form at 10 m") {
    ChannelConfig cfg;
    const double expected = 22.7 * std::log10(10.0) + 41.0 + 20.0 * std::log10(2.0 / 5.0);
    CHECK(pathloss_db(10.0, cfg) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(55.741).epsilon(1e-3));
}

TEST_CASE("pathloss is monotone and clamps below 3 m") {
    ChannelConfig cfg;
    CHECK(pathloss_db(100.0, cfg) > pathloss_db(50.0, cfg));
    CHECK(pathloss_db(1.0, cfg) == pathloss_db(3.0, cfg));
    CHECK(pathloss_db(2.9, cfg) == pathloss_db(3.0, cfg));
    CHECK_THROWS_AS(pathloss_db(0.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(pathloss_db(-5.0, cfg), std::invalid_argument);
    // nondecreasing on a grid from 10 m up
    double prev = pathloss_db(10.0, cfg);
    for (double d = 11.0; d <= 2000.0; d += 7.0) {
        const double pl = pathloss_db(d, cfg);
        CHECK(pl >= prev);
        prev = pl;
    }
}

TEST_CASE("far segment uses the effective-height constant") {
    ChannelConfig cfg;
    const double d = 500.0;
    const double expected = 40.0 * std::log10(d) + 9.45 - 2.0 * 17.3 * std::log10(0.5) +
                            2.7 * std::log10(2.0 / 5.0);
    CHECK(pathloss_db(d, cfg) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("shadowing is zero-mean with 3 dB std and fixed per pair+seed") {
    ChannelConfig cfg;
    double sum = 0.0, sum_sq = 0.0;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
        const double s = draw_shadow_db(k % 37, k % 11, cfg, static_cast<uint64_t>(k));
        sum += s;
        sum_sq += s * s;
    }
    const double mean = sum / draws;
    const double stddev = std::sqrt(sum_sq / draws - mean * mean);
    CHECK(std::fabs(mean) < 0.05);
    CHECK(stddev == doctest::Approx(3.0).epsilon(0.02));
    CHECK(draw_shadow_db(1, 2, cfg, 99) == draw_shadow_db(1, 2, cfg, 99));
    CHECK(draw_shadow_db(1, 2, cfg, 99) != draw_shadow_db(1, 2, cfg, 100));
}

TEST_CASE("fast fading power has unit mean") {
    ChannelConfig cfg;
    double sum = 0.0;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k)
        sum += draw_fade_power(k % 7, k % 5, k % 3, k % 23, cfg, static_cast<uint64_t>(k / 7));
    CHECK(sum / draws == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("degenerate draws reduce the gain to the closed form") {
    ChannelConfig cfg;
    const double pl = pathloss_db(120.0, cfg);
    const double n0 = dbm_to_w(-114.0 + 9.0);
    const double expected = std::pow(10.0, (-pl + 6.0) / 10.0) / n0;
    CHECK(gain_from_components(pl, 0.0, 1.0, cfg) == doctest::Approx(expected).epsilon(1e-12));
    // noise figure applied exactly once
    CHECK(cfg.noise_floor_dbm() == doctest::Approx(-105.0));
}

TEST_CASE("frequency-slots at one instant differ only by fast fading") {
    HighwayConfig hw;
    hw.seed = 9;
    Topology topo = drop_vehicles(hw, 2, 2);
    ChannelConfig cfg;
    ShadowTable shadow = draw_shadow_table(2, 2, cfg, 1234);
    ChannelTensor t = draw_gains(topo, 3, cfg, shadow, 1234, 1);
    for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w) {
            const double base0 = t.at(v, w, 0) / draw_fade_power(v, w, 0, 1, cfg, 1234);
            for (int f = 1; f < 3; ++f) {
                const double base = t.at(v, w, f) / draw_fade_power(v, w, f, 1, cfg, 1234);
                CHECK(base == doctest::Approx(base0).epsilon(1e-12));
            }
        }
    for (double g : t.g) {
        CHECK(std::isfinite(g));
        CHECK(g >= 0.0);
    }
}

TEST_CASE("mean gain decreases with distance when averaging fading") {
    ChannelConfig cfg;
    Rng rng(4242);
    double prev = 1e300;
    for (double d : {50.0, 100.0, 200.0, 400.0, 800.0}) {
        const double pl = pathloss_db(d, cfg);
        double sum = 0.0;
        for (int k = 0; k < 10000; ++k)
            sum += gain_from_components(pl, 0.0, rng.exponential(1.0), cfg);
        const double mean = sum / 10000.0;
        CHECK(mean < prev);
        prev = mean;
    }
}

// ---------------------------------------------------------------------------
// noma

namespace {

ChannelTensor make_gains(int m, std::vector<double> g) {
    ChannelTensor t(m, 1, 1, 1);
    for (int v = 0; v < m; ++v) t.at(v, 0, 0) = g[static_cast<size_t>(v)];
    return t;
}

}  // namespace

TEST_CASE("interference keeps only strictly weaker links") {
    // g_v = 2; one interferer at g=1 transmitting (1, 0); one at g=3 cancelled
    ChannelTensor gains = make_gains(3, {2.0, 1.0, 3.0});
    PowerProfile profile(3, 1);
    profile.at(1, Slice::non_safety, 0) = 1.0;
    profile.at(2, Slice::non_safety, 0) = 4.0;  // any power; SIC removes it
    profile.at(2, Slice::safety, 0) = 2.0;
    CHECK(interference(0, 0, 0, profile, gains) == doctest::Approx(1.0));

    // single transmitter: empty interferer set
    PowerProfile alone(1, 1);
    alone.at(0, Slice::safety, 0) = 1.0;
    CHECK(interference(0, 0, 0, alone, make_gains(1, {2.0})) == 0.0);

    // equal gains are excluded (strict inequality)
    ChannelTensor tie = make_gains(2, {2.0, 2.0});
    PowerProfile both(2, 1);
    both.at(1, Slice::non_safety, 0) = 5.0;
    CHECK(interference(0, 0, 0, both, tie) == 0.0);
}

TEST_CASE("sinr follows p g / (1 + I)") {
    ChannelTensor gains = make_gains(3, {2.0, 1.0, 3.0});
    PowerProfile profile(3, 1);
    profile.at(0, Slice::non_safety, 0) = 1.0;
    profile.at(1, Slice::non_safety, 0) = 1.0;
    profile.at(2, Slice::non_safety, 0) = 1.0;
    // continues the interference example: I = 1 for the g=2 link
    CHECK(sinr(0, 0, 0, Slice::non_safety, profile, gains) == doctest::Approx(1.0));

    PowerProfile alone(1, 1);
    alone.at(0, Slice::non_safety, 0) = 1.0;
    CHECK(sinr(0, 0, 0, Slice::non_safety, alone, make_gains(1, {2.0})) == doctest::Approx(2.0));
    alone.at(0, Slice::non_safety, 0) = 0.0;
    CHECK(sinr(0, 0, 0, Slice::non_safety, alone, make_gains(1, {2.0})) == 0.0);
}

TEST_CASE("sinr scales linearly in own power at fixed interference") {
    ChannelTensor gains = make_gains(2, {2.0, 1.0});
    PowerProfile profile(2, 1);
    profile.at(1, Slice::non_safety, 0) = 0.7;
    profile.at(0, Slice::safety, 0) = 0.5;
    const double base = sinr(0, 0, 0, Slice::safety, profile, gains);
    profile.at(0, Slice::safety, 0) = 1.0;
    CHECK(sinr(0, 0, 0, Slice::safety, profile, gains) == doctest::Approx(2.0 * base));
}

TEST_CASE("SIC monotonicity under added transmitters") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const double g_own = rng.uniform(0.5, 5.0);
        ChannelTensor two = make_gains(2, {g_own, g_own * rng.uniform(0.05, 0.95)});
        PowerProfile p2(2, 1);
        p2.at(0, Slice::non_safety, 0) = 1.0;
        const double clean = sinr(0, 0, 0, Slice::non_safety, p2, two);
        p2.at(1, Slice::non_safety, 0) = rng.uniform(0.1, 1.0);
        CHECK(sinr(0, 0, 0, Slice::non_safety, p2, two) < clean);

        ChannelTensor strong = make_gains(2, {g_own, g_own * rng.uniform(1.05, 5.0)});
        PowerProfile p3(2, 1);
        p3.at(0, Slice::non_safety, 0) = 1.0;
        p3.at(1, Slice::non_safety, 0) = rng.uniform(0.1, 1.0);
        CHECK(sinr(0, 0, 0, Slice::non_safety, p3, strong) == doctest::Approx(clean));
    }
}

TEST_CASE("achievable bits: shannon form, increasing and concave") {
    CHECK(achievable_bits(3.0, 1e6, 0.02) == doctest::Approx(40000.0).epsilon(1e-12));
    CHECK(achievable_bits(0.0, 1e6, 0.02) == 0.0);
    // NP-hardness construction unit: power = noise = channel = 1
    CHECK(achievable_bits(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    double prev = -1.0, prev_delta = 1e300;
    for (double s = 0.0; s <= 50.0; s += 0.5) {
        const double bits = achievable_bits(s, 1e6, 0.02);
        if (prev >= 0.0) {
            const double delta = bits - prev;
            CHECK(delta > 0.0);
            CHECK(delta < prev_delta);
            prev_delta = delta;
        }
        prev = bits;
    }
    CHECK_THROWS_AS(achievable_bits(-0.1, 1e6, 0.02), std::invalid_argument);
}
