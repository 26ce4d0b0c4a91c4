#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vra/rng.hpp"

namespace vra {

// Multilane highway per the 3GPP TR 37.885 highway configuration: six 4 m
// lanes on a 2 km segment, three lanes per direction, lane-dependent speeds.
struct HighwayConfig {
    double road_length_m = 2000.0;
    double lane_width_m = 4.0;
    int lanes_per_direction = 3;
    // Lane i (0-based within its direction) speeds; forward lanes run
    // right-to-left (negative x), backward lanes left-to-right.
    std::vector<double> forward_lane_speeds_kmh = {60.0, 80.0, 100.0};
    std::vector<double> backward_lane_speeds_kmh = {100.0, 80.0, 60.0};
    double headway_s = 2.5;
    uint64_t seed = 0;

    int lane_count() const { return 2 * lanes_per_direction; }
    bool lane_is_forward(int lane) const { return lane < lanes_per_direction; }
    // Signed speed in m/s: forward lanes negative, backward positive.
    double lane_speed_mps(int lane) const;
    double lane_center_y(int lane) const { return (lane + 0.5) * lane_width_m; }
};

enum class VehicleKind { transmitter, receiver };

struct VehicleState {
    int id = 0;
    VehicleKind kind = VehicleKind::transmitter;
    int lane = 0;
    double position_m = 0.0;
    double speed_mps = 0.0;
    double y_m = 0.0;
};

struct Topology {
    std::vector<VehicleState> vehicles;  // indexed by id: tx 0..m-1, rx m..m+n-1
    double time_s = 0.0;
    double road_length_m = 2000.0;
    int tx_count = 0;
    int rx_count = 0;

    const VehicleState& by_id(int id) const;
};

// Positions of the spatial Poisson process on one lane: successive gaps are
// exponential with mean headway_s * |lane speed|.
std::vector<double> lane_poisson_positions(const HighwayConfig& cfg, int lane, Rng& rng);

// Spatial-Poisson drop: per lane, successive gaps are exponential with mean
// headway_s * |lane speed|; m transmitters and n receivers are labeled
// uniformly at random from the pooled vehicles. Deterministic given cfg.seed.
// Throws std::runtime_error naming the required density when the drop does
// not generate at least m+n vehicles.
Topology drop_vehicles(const HighwayConfig& cfg, int m, int n);

// Linear motion with wrap-around modulo road length; lanes and speeds fixed.
Topology advance(const Topology& t, double dt_s);

// Euclidean distance on (x, y) coordinates. Throws on unknown id or a == b.
double distance(const Topology& t, int a, int b);

// Line-oriented debug snapshot: one "id kind lane x y speed" row per vehicle.
std::string to_snapshot(const Topology& t);

}  // namespace vra
