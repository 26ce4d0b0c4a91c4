#include "vra/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vra {

namespace {
constexpr uint64_t kDropStream = 0x44524f50;  // "DROP"
constexpr double kKmhToMps = 1000.0 / 3600.0;
}  // namespace

double HighwayConfig::lane_speed_mps(int lane) const {
    if (lane < 0 || lane >= lane_count())
        throw std::invalid_argument("lane index out of range");
    if (lane_is_forward(lane))
        return -forward_lane_speeds_kmh[static_cast<size_t>(lane)] * kKmhToMps;
    return backward_lane_speeds_kmh[static_cast<size_t>(lane - lanes_per_direction)] * kKmhToMps;
}

const VehicleState& Topology::by_id(int id) const {
    if (id < 0 || id >= static_cast<int>(vehicles.size()))
        throw std::invalid_argument("unknown vehicle id " + std::to_string(id));
    return vehicles[static_cast<size_t>(id)];
}

std::vector<double> lane_poisson_positions(const HighwayConfig& cfg, int lane, Rng& rng) {
    const double speed = std::abs(cfg.lane_speed_mps(lane));
    const double mean_gap = cfg.headway_s * speed;
    std::vector<double> positions;
    double x = rng.exponential(mean_gap);
    while (x < cfg.road_length_m) {
        positions.push_back(x);
        x += rng.exponential(mean_gap);
    }
    return positions;
}

Topology drop_vehicles(const HighwayConfig& cfg, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
    if (cfg.road_length_m <= 0.0 || cfg.lane_width_m <= 0.0)
        throw std::invalid_argument("road_length_m and lane_width_m must be positive");
    if (static_cast<int>(cfg.forward_lane_speeds_kmh.size()) < cfg.lanes_per_direction ||
        static_cast<int>(cfg.backward_lane_speeds_kmh.size()) < cfg.lanes_per_direction)
        throw std::invalid_argument("lane speed list shorter than lanes_per_direction");

    Rng rng = Rng::keyed(cfg.seed, kDropStream);

    struct Raw {
        int lane;
        double x;
    };
    std::vector<Raw> pool;
    for (int lane = 0; lane < cfg.lane_count(); ++lane)
        for (double x : lane_poisson_positions(cfg, lane, rng)) pool.push_back({lane, x});

    const size_t need = static_cast<size_t>(m) + static_cast<size_t>(n);
    if (pool.size() < need) {
        std::ostringstream msg;
        msg << "drop generated " << pool.size() << " vehicles but " << need
            << " are required; at headway " << cfg.headway_s
            << " s the road supports roughly "
            << cfg.lane_count() * cfg.road_length_m /
                   (cfg.headway_s * std::abs(cfg.lane_speed_mps(0)))
            << " vehicles";
        throw std::runtime_error(msg.str());
    }

    // Partial Fisher-Yates: the first m+n slots pick the labeled vehicles
    // uniformly at random from the pool.
    std::vector<size_t> order(pool.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (size_t i = 0; i < need; ++i) {
        const size_t j = i + rng.uniform_int(order.size() - i);
        std::swap(order[i], order[j]);
    }

    Topology topo;
    topo.road_length_m = cfg.road_length_m;
    topo.tx_count = m;
    topo.rx_count = n;
    topo.vehicles.reserve(need);
    for (size_t i = 0; i < need; ++i) {
        const Raw& raw = pool[order[i]];
        VehicleState v;
        v.id = static_cast<int>(i);
        v.kind = i < static_cast<size_t>(m) ? VehicleKind::transmitter : VehicleKind::receiver;
        v.lane = raw.lane;
        v.position_m = raw.x;
        v.speed_mps = cfg.lane_speed_mps(raw.lane);
        v.y_m = cfg.lane_center_y(raw.lane);
        topo.vehicles.push_back(v);
    }
    return topo;
}

Topology advance(const Topology& t, double dt_s) {
    if (dt_s <= 0.0) throw std::invalid_argument("dt_s must be positive");
    Topology out = t;
    out.time_s = t.time_s + dt_s;
    for (VehicleState& v : out.vehicles) {
        double x = std::fmod(v.position_m + v.speed_mps * dt_s, t.road_length_m);
        if (x < 0.0) x += t.road_length_m;
        v.position_m = x;
    }
    return out;
}

double distance(const Topology& t, int a, int b) {
    if (a == b) throw std::invalid_argument("distance requires two distinct vehicles");
    const VehicleState& va = t.by_id(a);
    const VehicleState& vb = t.by_id(b);
    const double dx = va.position_m - vb.position_m;
    const double dy = va.y_m - vb.y_m;
    return std::hypot(dx, dy);
}

std::string to_snapshot(const Topology& t) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed;
    for (const VehicleState& v : t.vehicles) {
        os << v.id << ' ' << (v.kind == VehicleKind::transmitter ? "tx" : "rx") << ' '
           << v.lane << ' ' << v.position_m << ' ' << v.y_m << ' ' << v.speed_mps << '\n';
    }
    return os.str();
}

}  // namespace vra
