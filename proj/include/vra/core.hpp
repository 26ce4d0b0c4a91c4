#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vra/noma.hpp"

namespace vra {

// Discrete joint decision set of one agent: coverage radius, slice subset,
// frequency-slot and power level, flattened to a single index.
struct ActionSpace {
    static constexpr double kSilentDbm = -100.0;
    static constexpr int kSliceSetCount = 4;  // bitmask over {n, s}

    std::vector<double> coverage_m = {0.0, 100.0, 200.0, 400.0, 800.0, 1000.0, 1200.0, 1400.0};
    std::vector<double> power_dbm = {kSilentDbm, 5.0, 10.0, 15.0, 20.0, 23.0, 27.0, 30.0};
    int freq_count = 1;

    int coverage_count() const { return static_cast<int>(coverage_m.size()); }
    int power_count() const { return static_cast<int>(power_dbm.size()); }
    int action_count() const {
        return coverage_count() * kSliceSetCount * freq_count * power_count();
    }
    int encode(int cov_idx, int slice_set, int freq, int power_idx) const {
        return ((cov_idx * kSliceSetCount + slice_set) * freq_count + freq) * power_count() +
               power_idx;
    }
    double max_power_w() const;
};

struct AgentAction {
    int coverage_idx = 0;
    int slice_set = 0;  // bit 0: non-safety, bit 1: safety
    int freq = 0;
    int power_idx = 0;
    double coverage_m = 0.0;
    double power_dbm = ActionSpace::kSilentDbm;

    bool wants(Slice i) const { return (slice_set >> static_cast<int>(i)) & 1; }
    // An action only transmits when it names packets, a positive coverage and
    // a non-sentinel power level.
    bool transmits() const {
        return slice_set != 0 && coverage_m > 0.0 && power_dbm > ActionSpace::kSilentDbm + 1e-9;
    }
    double power_w() const { return transmits() ? dbm_to_w(power_dbm) : 0.0; }
};

AgentAction decode_action(const ActionSpace& space, int flat);

struct PacketSpec {
    int owner = 0;
    Slice slice = Slice::non_safety;
    double size_bits = 0.0;
    int arrival_slot = 1;   // 1-based, inclusive
    int deadline_slot = 1;  // 1-based, inclusive
};

// One optimization problem: the RB grid, packets, discrete decision sets and
// a precomputed gain trace, plus coverage-to-target-set tables per slot.
struct VraInstance {
    int m = 0, n = 0;
    int freq_count = 1;
    int horizon = 1;  // T
    double tau_s = 0.02;
    double beta_hz = 1e6;
    std::vector<double> p_max_w;
    ActionSpace space;
    std::vector<PacketSpec> packets;      // 2m, index packet_index(v, slice)
    std::vector<ChannelTensor> gains;     // [t-1], slot t in 1..T
    std::vector<uint32_t> targets;        // [(v * |C| + ci) * T + (t-1)] receiver bitmask
    std::vector<double> agent_dists;      // optional [( (t-1) * m + v) * m + v'], for replays
    bool oma = false;

    static int packet_index(int v, Slice i) { return v * kSliceCount + static_cast<int>(i); }
    const PacketSpec& packet(int v, Slice i) const { return packets[packet_index(v, i)]; }
    uint32_t target_mask(int v, int cov_idx, int t) const {
        return targets[(static_cast<size_t>(v) * space.coverage_count() + cov_idx) * horizon +
                       (t - 1)];
    }
    bool has_agent_dists() const { return !agent_dists.empty(); }
    double agent_distance(int t, int v, int v2) const {
        return agent_dists[(static_cast<size_t>(t - 1) * m + v) * m + v2];
    }
    double beta_tau() const { return beta_hz * tau_s; }
    void validate() const;
};

// Candidate solution: per-RB transmission indicators x, delivery indicators y
// and the transmit powers p.
struct Assignment {
    int m = 0, n = 0, freq_count = 1, horizon = 1;
    std::vector<uint8_t> x;  // (((v*n + w)*F + f)*T + t-1)*2 + i
    std::vector<uint8_t> y;  // (v*n + w)*2 + i
    std::vector<double> p;   // ((v*F + f)*T + t-1)*2 + i

    Assignment() = default;
    Assignment(int m_, int n_, int F_, int T_);

    size_t x_index(int v, int w, int f, int t, Slice i) const {
        return (((static_cast<size_t>(v) * n + w) * freq_count + f) * horizon + (t - 1)) *
                   kSliceCount +
               static_cast<int>(i);
    }
    size_t y_index(int v, int w, Slice i) const {
        return (static_cast<size_t>(v) * n + w) * kSliceCount + static_cast<int>(i);
    }
    size_t p_index(int v, int f, int t, Slice i) const {
        return ((static_cast<size_t>(v) * freq_count + f) * horizon + (t - 1)) * kSliceCount +
               static_cast<int>(i);
    }
    uint8_t x_at(int v, int w, int f, int t, Slice i) const { return x[x_index(v, w, f, t, i)]; }
    uint8_t y_at(int v, int w, Slice i) const { return y[y_index(v, w, i)]; }
    double p_at(int v, int f, int t, Slice i) const { return p[p_index(v, f, t, i)]; }
};

enum class ConstraintTag { c4b, c4c, c4d, c4e, c4f, c4g, c4h, c4i, c4j, oma_exclusive };
const char* tag_name(ConstraintTag tag);

struct Violation {
    ConstraintTag tag;
    std::vector<int> indices;
    std::string detail;
};

// Empty result iff the assignment satisfies (4b)-(4j), plus RB exclusivity
// when the instance is OMA-restricted. Throws on dimension mismatch.
std::vector<Violation> check_feasible(const VraInstance& inst, const Assignment& a);

// Eq. objective: number of delivered (transmitter, receiver, packet) pairs.
int objective(const Assignment& a);

// Transmit powers of an assignment at one slot.
PowerProfile profile_at(const Assignment& a, int t);

// Effect of one agent's decision in one slot: addressed receivers plus the
// per-packet frequency/power actually radiated.
struct EffAction {
    uint32_t target_bits = 0;
    int freq[kSliceCount] = {-1, -1};
    double power_w[kSliceCount] = {0.0, 0.0};

    bool active(Slice i) const {
        return freq[static_cast<int>(i)] >= 0 && power_w[static_cast<int>(i)] > 0.0;
    }
    bool any_active() const { return active(Slice::non_safety) || active(Slice::safety); }
};

// Resolve an action into effect form. When both packets are selected the
// safety packet keeps the chosen frequency and the non-safety packet moves to
// (f+1) mod F so the two stay on orthogonal RBs.
EffAction effective_action(const VraInstance& inst, int v, const AgentAction& a, int t);

// Per-slot transmission bookkeeping shared by the environment, the oracle and
// the baselines: accumulates achievable bits into acc for every addressed
// (v, w, packet) triple. acc is dense m*n*2, index (v*n + w)*2 + i.
struct SlotOutcome {
    std::vector<double> bits;  // added bits, dense m*n*2
    std::vector<double> sinr;  // per-pair sinr where addressed, else 0
};
SlotOutcome apply_slot(const VraInstance& inst, int t, const std::vector<EffAction>& actions,
                       std::vector<double>& acc);

using Plan = std::vector<std::vector<EffAction>>;  // [t-1][v]

struct PlanRun {
    std::vector<double> acc;         // final accumulated bits, dense m*n*2
    std::vector<uint8_t> delivered;  // dense m*n*2
    int delivered_count = 0;
};
PlanRun run_plan(const VraInstance& inst, const Plan& plan);

// Builds the assignment a completed plan induces: only delivered pairs carry
// x/y, and powers are kept only on RBs serving at least one delivered pair.
// Such assignments satisfy (4b)-(4j) by construction.
Assignment induce_assignment(const VraInstance& inst, const Plan& plan);

inline size_t pair_index(const VraInstance& inst, int v, int w, Slice i) {
    return (static_cast<size_t>(v) * inst.n + w) * kSliceCount + static_cast<int>(i);
}

}  // namespace vra
