#include "vra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vra {

namespace {

bool same_effect(const EffAction& a, const EffAction& b) {
    return a.target_bits == b.target_bits && a.freq[0] == b.freq[0] && a.freq[1] == b.freq[1] &&
           a.power_w[0] == b.power_w[0] && a.power_w[1] == b.power_w[1];
}

struct Search {
    const VraInstance& inst;
    bool prune;
    // cands[v][t-1]: deduplicated effective actions (silence first).
    std::vector<std::vector<std::vector<EffAction>>> cands;
    // suffix_ub[(v*n + w)*2 + i][t-1]: optimistic bits obtainable from slot t on.
    std::vector<std::vector<double>> suffix_ub;

    std::vector<double> acc;
    std::vector<uint8_t> delivered;
    int delivered_count = 0;
    int best = -1;
    Plan cur;
    Plan best_plan;
    uint64_t nodes = 0;

    explicit Search(const VraInstance& inst_, bool prune_) : inst(inst_), prune(prune_) {}

    int bound(int t) const {
        int possible = delivered_count;
        for (int v = 0; v < inst.m; ++v)
            for (int w = 0; w < inst.n; ++w)
                for (int ii = 0; ii < kSliceCount; ++ii) {
                    const size_t idx = pair_index(inst, v, w, static_cast<Slice>(ii));
                    if (delivered[idx]) continue;
                    const double need = inst.packet(v, static_cast<Slice>(ii)).size_bits;
                    if (acc[idx] + suffix_ub[idx][static_cast<size_t>(t - 1)] >= need) ++possible;
                }
        return possible;
    }

    void joint(int t, int v, std::vector<EffAction>& eff, uint32_t used_rb) {
        if (v == inst.m) {
            evaluate(t, eff);
            return;
        }
        for (const EffAction& cand : cands[static_cast<size_t>(v)][static_cast<size_t>(t - 1)]) {
            uint32_t next_used = used_rb;
            if (inst.oma && cand.any_active()) {
                uint32_t mask = 0;
                for (int ii = 0; ii < kSliceCount; ++ii)
                    if (cand.active(static_cast<Slice>(ii))) mask |= 1u << cand.freq[ii];
                if (mask & used_rb) continue;  // RB already claimed under OMA
                next_used |= mask;
            }
            eff[static_cast<size_t>(v)] = cand;
            joint(t, v + 1, eff, next_used);
        }
    }

    void evaluate(int t, const std::vector<EffAction>& eff) {
        ++nodes;
        const SlotOutcome outcome = apply_slot(inst, t, eff, acc);
        std::vector<size_t> newly;
        for (size_t idx = 0; idx < acc.size(); ++idx) {
            if (outcome.bits[idx] <= 0.0 || delivered[idx]) continue;
            const int v = static_cast<int>(idx / (inst.n * kSliceCount));
            const Slice i = static_cast<Slice>(idx % kSliceCount);
            if (acc[idx] >= inst.packet(v, i).size_bits) {
                delivered[idx] = 1;
                ++delivered_count;
                newly.push_back(idx);
            }
        }
        cur[static_cast<size_t>(t - 1)] = eff;
        descend(t + 1);
        for (size_t idx : newly) {
            delivered[idx] = 0;
            --delivered_count;
        }
        for (size_t idx = 0; idx < acc.size(); ++idx) acc[idx] -= outcome.bits[idx];
    }

    void descend(int t) {
        if (t > inst.horizon) {
            if (delivered_count > best) {
                best = delivered_count;
                best_plan = cur;
            }
            return;
        }
        if (prune && bound(t) <= best) return;
        std::vector<EffAction> eff(static_cast<size_t>(inst.m));
        joint(t, 0, eff, 0);
    }
};

}  // namespace

OracleResult brute_force_oracle(const VraInstance& inst, const OracleOptions& opt) {
    inst.validate();
    const ActionSpace& grid = opt.grid ? *opt.grid : inst.space;
    const int m = inst.m, n = inst.n, T = inst.horizon;

    Search search(inst, opt.prune);

    // Optimistic per-slot bits: best frequency, grid-max power, no
    // interference, receiver reachable by some coverage level.
    std::vector<std::vector<double>> ub_bits(
        static_cast<size_t>(m) * n, std::vector<double>(static_cast<size_t>(T), 0.0));
    const double p_cap = grid.max_power_w();
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            for (int t = 1; t <= T; ++t) {
                uint32_t reach = 0;
                for (int ci = 0; ci < inst.space.coverage_count(); ++ci)
                    reach |= inst.target_mask(v, ci, t);
                if (!((reach >> w) & 1u)) continue;
                double g_best = 0.0;
                for (int f = 0; f < inst.freq_count; ++f)
                    g_best = std::max(g_best, inst.gains[static_cast<size_t>(t - 1)].at(v, w, f));
                const double p = std::min(p_cap, inst.p_max_w[static_cast<size_t>(v)]);
                ub_bits[static_cast<size_t>(v) * n + w][static_cast<size_t>(t - 1)] =
                    achievable_bits(p * g_best, inst.beta_hz, inst.tau_s);
            }
    search.suffix_ub.assign(static_cast<size_t>(m) * n * kSliceCount,
                            std::vector<double>(static_cast<size_t>(T + 1), 0.0));
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const PacketSpec& pkt = inst.packet(v, static_cast<Slice>(ii));
                auto& sfx = search.suffix_ub[pair_index(inst, v, w, static_cast<Slice>(ii))];
                for (int t = T; t >= 1; --t) {
                    const bool in_window = t >= pkt.arrival_slot && t <= pkt.deadline_slot;
                    sfx[static_cast<size_t>(t - 1)] =
                        sfx[static_cast<size_t>(t)] +
                        (in_window ? ub_bits[static_cast<size_t>(v) * n + w][static_cast<size_t>(t - 1)]
                                   : 0.0);
                }
            }

    // A packet no receiver could ever accumulate is never worth radiating:
    // dropping it from candidate actions only removes interference.
    std::vector<bool> attainable(static_cast<size_t>(m) * kSliceCount, false);
    for (int v = 0; v < m; ++v)
        for (int ii = 0; ii < kSliceCount; ++ii) {
            const double need = inst.packet(v, static_cast<Slice>(ii)).size_bits;
            for (int w = 0; w < n; ++w)
                if (search.suffix_ub[pair_index(inst, v, w, static_cast<Slice>(ii))][0] >= need) {
                    attainable[static_cast<size_t>(v) * kSliceCount + ii] = true;
                    break;
                }
        }

    search.cands.assign(static_cast<size_t>(m), {});
    double joint_space = 1.0;
    for (int v = 0; v < m; ++v) {
        auto& per_slot = search.cands[static_cast<size_t>(v)];
        per_slot.assign(static_cast<size_t>(T), {});
        const PacketSpec& s_pkt = inst.packet(v, Slice::safety);
        for (int t = 1; t <= T; ++t) {
            std::vector<EffAction>& list = per_slot[static_cast<size_t>(t - 1)];
            list.push_back(EffAction{});  // silence is always admissible
            for (int flat = 0; flat < grid.action_count(); ++flat) {
                AgentAction a = decode_action(grid, flat);
                if (!a.transmits()) continue;
                if (a.wants(Slice::safety) && (t < s_pkt.arrival_slot || t > s_pkt.deadline_slot))
                    continue;
                if (a.slice_set == 3 && inst.freq_count == 1) continue;
                for (int ii = 0; ii < kSliceCount; ++ii)
                    if (a.wants(static_cast<Slice>(ii)) &&
                        !attainable[static_cast<size_t>(v) * kSliceCount + ii])
                        a.slice_set &= ~(1 << ii);
                if (a.slice_set == 0) continue;
                // Coverage levels are defined on the instance's own space;
                // grid coverages map to the nearest level not exceeding them.
                int ci = 0;
                for (int k = 0; k < inst.space.coverage_count(); ++k)
                    if (inst.space.coverage_m[static_cast<size_t>(k)] <= a.coverage_m + 1e-9)
                        ci = k;
                a.coverage_idx = ci;
                a.coverage_m = inst.space.coverage_m[static_cast<size_t>(ci)];
                if (!a.transmits()) continue;
                EffAction eff = effective_action(inst, v, a, t);
                if (eff.target_bits == 0) continue;  // nobody addressed: silence dominates
                bool dup = false;
                for (const EffAction& seen : list)
                    if (same_effect(seen, eff)) {
                        dup = true;
                        break;
                    }
                if (!dup) list.push_back(eff);
            }
        }
    }
    for (int t = 1; t <= T; ++t) {
        double slot_joint = 1.0;
        for (int v = 0; v < m; ++v)
            slot_joint *= static_cast<double>(
                search.cands[static_cast<size_t>(v)][static_cast<size_t>(t - 1)].size());
        joint_space *= slot_joint;
    }
    if (joint_space > opt.cap) {
        std::ostringstream msg;
        msg << "oracle refusal: effective joint search space " << joint_space
            << " exceeds cap " << opt.cap;
        throw std::runtime_error(msg.str());
    }

    search.acc.assign(static_cast<size_t>(m) * n * kSliceCount, 0.0);
    search.delivered.assign(search.acc.size(), 0);
    search.cur.assign(static_cast<size_t>(T),
                      std::vector<EffAction>(static_cast<size_t>(m)));
    search.best_plan = search.cur;
    search.descend(1);

    OracleResult result;
    result.best_objective = std::max(search.best, 0);
    result.best_plan = search.best_plan;
    result.best = induce_assignment(inst, search.best_plan);
    result.nodes = search.nodes;
    result.joint_space = joint_space;
    return result;
}

}  // namespace vra
