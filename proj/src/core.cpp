#include "vra/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vra {

namespace {
constexpr double kRelTol = 1e-12;

void push_violation(std::vector<Violation>& out, ConstraintTag tag, std::vector<int> idx,
                    std::string detail) {
    out.push_back(Violation{tag, std::move(idx), std::move(detail)});
}
}  // namespace

double ActionSpace::max_power_w() const {
    double best = 0.0;
    for (double dbm : power_dbm)
        if (dbm > kSilentDbm + 1e-9) best = std::max(best, dbm_to_w(dbm));
    return best;
}

AgentAction decode_action(const ActionSpace& space, int flat) {
    if (flat < 0 || flat >= space.action_count())
        throw std::invalid_argument("flat action index out of range");
    AgentAction a;
    a.power_idx = flat % space.power_count();
    flat /= space.power_count();
    a.freq = flat % space.freq_count;
    flat /= space.freq_count;
    a.slice_set = flat % ActionSpace::kSliceSetCount;
    a.coverage_idx = flat / ActionSpace::kSliceSetCount;
    a.coverage_m = space.coverage_m[static_cast<size_t>(a.coverage_idx)];
    a.power_dbm = space.power_dbm[static_cast<size_t>(a.power_idx)];
    return a;
}

void VraInstance::validate() const {
    if (m < 1 || n < 1 || freq_count < 1 || horizon < 1)
        throw std::invalid_argument("instance dimensions must be positive");
    if (n > 32) throw std::invalid_argument("receiver bitmasks support at most 32 receivers");
    if (static_cast<int>(packets.size()) != 2 * m)
        throw std::invalid_argument("instance must carry exactly 2m packets");
    if (static_cast<int>(p_max_w.size()) != m)
        throw std::invalid_argument("p_max_w must have one entry per transmitter");
    if (static_cast<int>(gains.size()) != horizon)
        throw std::invalid_argument("gain trace must cover all T slots");
    for (const ChannelTensor& g : gains)
        if (g.m != m || g.n != n || g.freq_count != freq_count)
            throw std::invalid_argument("gain tensor dimensions mismatch");
    if (targets.size() != static_cast<size_t>(m) * space.coverage_count() * horizon)
        throw std::invalid_argument("coverage target table dimensions mismatch");
    for (const PacketSpec& pkt : packets) {
        if (pkt.size_bits <= 0.0) throw std::invalid_argument("packet sizes must be positive");
        if (pkt.arrival_slot < 1 || pkt.arrival_slot > pkt.deadline_slot ||
            pkt.deadline_slot > horizon)
            throw std::invalid_argument("packet window must satisfy 1 <= s <= e <= T");
    }
}

Assignment::Assignment(int m_, int n_, int F_, int T_)
    : m(m_), n(n_), freq_count(F_), horizon(T_),
      x(static_cast<size_t>(m_) * n_ * F_ * T_ * kSliceCount, 0),
      y(static_cast<size_t>(m_) * n_ * kSliceCount, 0),
      p(static_cast<size_t>(m_) * F_ * T_ * kSliceCount, 0.0) {}

const char* tag_name(ConstraintTag tag) {
    switch (tag) {
        case ConstraintTag::c4b: return "4b";
        case ConstraintTag::c4c: return "4c";
        case ConstraintTag::c4d: return "4d";
        case ConstraintTag::c4e: return "4e";
        case ConstraintTag::c4f: return "4f";
        case ConstraintTag::c4g: return "4g";
        case ConstraintTag::c4h: return "4h";
        case ConstraintTag::c4i: return "4i";
        case ConstraintTag::c4j: return "4j";
        case ConstraintTag::oma_exclusive: return "oma";
    }
    return "?";
}

PowerProfile profile_at(const Assignment& a, int t) {
    PowerProfile profile(a.m, a.freq_count);
    for (int v = 0; v < a.m; ++v)
        for (int f = 0; f < a.freq_count; ++f)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const Slice i = static_cast<Slice>(ii);
                profile.at(v, i, f) = a.p_at(v, f, t, i);
            }
    return profile;
}

std::vector<Violation> check_feasible(const VraInstance& inst, const Assignment& a) {
    inst.validate();
    if (a.m != inst.m || a.n != inst.n || a.freq_count != inst.freq_count ||
        a.horizon != inst.horizon)
        throw std::invalid_argument("assignment dimensions do not match instance");

    std::vector<Violation> out;
    const int m = inst.m, n = inst.n, F = inst.freq_count, T = inst.horizon;

    // (4b) binary domains
    for (size_t idx = 0; idx < a.x.size(); ++idx)
        if (a.x[idx] > 1)
            push_violation(out, ConstraintTag::c4b, {static_cast<int>(idx)}, "x not binary");
    for (size_t idx = 0; idx < a.y.size(); ++idx)
        if (a.y[idx] > 1)
            push_violation(out, ConstraintTag::c4b, {static_cast<int>(idx)}, "y not binary");

    // (4c) power box
    for (int v = 0; v < m; ++v)
        for (int f = 0; f < F; ++f)
            for (int t = 1; t <= T; ++t)
                for (int ii = 0; ii < kSliceCount; ++ii) {
                    const Slice i = static_cast<Slice>(ii);
                    const double p = a.p_at(v, f, t, i);
                    if (p < 0.0 || p > inst.p_max_w[v] * (1.0 + kRelTol)) {
                        std::ostringstream d;
                        d << "p=" << p << " outside [0, " << inst.p_max_w[v] << "]";
                        push_violation(out, ConstraintTag::c4c, {v, f, t, ii}, d.str());
                    }
                }

    // (4d) rate coverage for every delivered pair, summed over the whole grid
    std::vector<PowerProfile> profiles;
    profiles.reserve(static_cast<size_t>(T));
    for (int t = 1; t <= T; ++t) profiles.push_back(profile_at(a, t));
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const Slice i = static_cast<Slice>(ii);
                if (!a.y_at(v, w, i)) continue;
                double bits = 0.0;
                for (int t = 1; t <= T; ++t)
                    for (int f = 0; f < F; ++f)
                        bits += achievable_bits(sinr(v, w, f, i, profiles[t - 1], inst.gains[t - 1]),
                                                inst.beta_hz, inst.tau_s);
                const double need = inst.packet(v, i).size_bits;
                if (bits < need * (1.0 - 1e-9)) {
                    std::ostringstream d;
                    d << "accumulated " << bits << " bits < required " << need;
                    push_violation(out, ConstraintTag::c4d, {v, w, ii}, d.str());
                }
            }

    // (4e) at most one frequency-slot per (v, t, i)
    for (int v = 0; v < m; ++v)
        for (int t = 1; t <= T; ++t)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const Slice i = static_cast<Slice>(ii);
                int used = 0;
                for (int f = 0; f < F; ++f) {
                    bool any = false;
                    for (int w = 0; w < n; ++w) any = any || a.x_at(v, w, f, t, i);
                    used += any ? 1 : 0;
                }
                if (used > 1)
                    push_violation(out, ConstraintTag::c4e, {v, t, ii},
                                   "packet uses more than one frequency-slot");
            }

    // (4f) x <= y and (4h) slice orthogonality per RB and (4i) safety window
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            for (int f = 0; f < F; ++f)
                for (int t = 1; t <= T; ++t) {
                    for (int ii = 0; ii < kSliceCount; ++ii) {
                        const Slice i = static_cast<Slice>(ii);
                        if (a.x_at(v, w, f, t, i) && !a.y_at(v, w, i))
                            push_violation(out, ConstraintTag::c4f, {v, w, f, t, ii},
                                           "x set without y");
                    }
                    if (a.x_at(v, w, f, t, Slice::non_safety) &&
                        a.x_at(v, w, f, t, Slice::safety))
                        push_violation(out, ConstraintTag::c4h, {v, w, f, t},
                                       "both packets share one RB");
                    const PacketSpec& s_pkt = inst.packet(v, Slice::safety);
                    if (a.x_at(v, w, f, t, Slice::safety) &&
                        (t < s_pkt.arrival_slot || t > s_pkt.deadline_slot))
                        push_violation(out, ConstraintTag::c4i, {v, w, f, t},
                                       "safety transmission outside its window");
                }

    // (4g) y requires at least one RB
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < n; ++w)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const Slice i = static_cast<Slice>(ii);
                if (!a.y_at(v, w, i)) continue;
                int count = 0;
                for (int f = 0; f < F; ++f)
                    for (int t = 1; t <= T; ++t) count += a.x_at(v, w, f, t, i);
                if (count == 0)
                    push_violation(out, ConstraintTag::c4g, {v, w, ii},
                                   "delivery without any assigned RB");
            }

    // (4j) positive power requires a served receiver on that RB
    for (int v = 0; v < m; ++v)
        for (int f = 0; f < F; ++f)
            for (int t = 1; t <= T; ++t)
                for (int ii = 0; ii < kSliceCount; ++ii) {
                    const Slice i = static_cast<Slice>(ii);
                    if (a.p_at(v, f, t, i) <= 0.0) continue;
                    bool any = false;
                    for (int w = 0; w < n; ++w) any = any || a.x_at(v, w, f, t, i);
                    if (!any)
                        push_violation(out, ConstraintTag::c4j, {v, f, t, ii},
                                       "power without transmission");
                }

    // OMA exclusivity: each RB carries at most one transmitter
    if (inst.oma) {
        for (int f = 0; f < F; ++f)
            for (int t = 1; t <= T; ++t) {
                int users = 0;
                for (int v = 0; v < m; ++v)
                    if (a.p_at(v, f, t, Slice::non_safety) > 0.0 ||
                        a.p_at(v, f, t, Slice::safety) > 0.0)
                        ++users;
                if (users > 1)
                    push_violation(out, ConstraintTag::oma_exclusive, {f, t},
                                   "RB shared by multiple transmitters under OMA");
            }
    }
    return out;
}

int objective(const Assignment& a) {
    int total = 0;
    for (uint8_t flag : a.y) total += flag;
    return total;
}

EffAction effective_action(const VraInstance& inst, int v, const AgentAction& a, int t) {
    EffAction eff;
    if (!a.transmits()) return eff;
    eff.target_bits = inst.target_mask(v, a.coverage_idx, t);
    const double watts = std::min(a.power_w(), inst.p_max_w[v]);
    if (a.wants(Slice::safety)) {
        eff.freq[static_cast<int>(Slice::safety)] = a.freq;
        eff.power_w[static_cast<int>(Slice::safety)] = watts;
    }
    if (a.wants(Slice::non_safety)) {
        const int f_n = a.slice_set == 3 ? (a.freq + 1) % inst.freq_count : a.freq;
        eff.freq[static_cast<int>(Slice::non_safety)] = f_n;
        eff.power_w[static_cast<int>(Slice::non_safety)] = watts;
    }
    if (a.slice_set == 3 && inst.freq_count == 1)
        throw std::invalid_argument("both packets in one frequency-slot are infeasible at F=1");
    return eff;
}

SlotOutcome apply_slot(const VraInstance& inst, int t, const std::vector<EffAction>& actions,
                       std::vector<double>& acc) {
    const int m = inst.m, n = inst.n;
    SlotOutcome outcome;
    outcome.bits.assign(static_cast<size_t>(m) * n * kSliceCount, 0.0);
    outcome.sinr.assign(static_cast<size_t>(m) * n * kSliceCount, 0.0);

    PowerProfile profile(m, inst.freq_count);
    for (int v = 0; v < m; ++v)
        for (int ii = 0; ii < kSliceCount; ++ii) {
            const Slice i = static_cast<Slice>(ii);
            if (actions[static_cast<size_t>(v)].active(i))
                profile.at(v, i, actions[static_cast<size_t>(v)].freq[ii]) =
                    actions[static_cast<size_t>(v)].power_w[ii];
        }

    const ChannelTensor& gains = inst.gains[static_cast<size_t>(t - 1)];
    for (int v = 0; v < m; ++v) {
        const EffAction& act = actions[static_cast<size_t>(v)];
        for (int ii = 0; ii < kSliceCount; ++ii) {
            const Slice i = static_cast<Slice>(ii);
            if (!act.active(i)) continue;
            const int f = act.freq[ii];
            for (int w = 0; w < n; ++w) {
                if (!((act.target_bits >> w) & 1u)) continue;
                const double s = sinr(v, w, f, i, profile, gains);
                const double bits = achievable_bits(s, inst.beta_hz, inst.tau_s);
                const size_t idx = pair_index(inst, v, w, i);
                outcome.sinr[idx] = s;
                outcome.bits[idx] = bits;
                acc[idx] += bits;
            }
        }
    }
    return outcome;
}

PlanRun run_plan(const VraInstance& inst, const Plan& plan) {
    if (static_cast<int>(plan.size()) != inst.horizon)
        throw std::invalid_argument("plan must cover all T slots");
    PlanRun run;
    run.acc.assign(static_cast<size_t>(inst.m) * inst.n * kSliceCount, 0.0);
    for (int t = 1; t <= inst.horizon; ++t)
        apply_slot(inst, t, plan[static_cast<size_t>(t - 1)], run.acc);
    run.delivered.assign(run.acc.size(), 0);
    for (int v = 0; v < inst.m; ++v)
        for (int w = 0; w < inst.n; ++w)
            for (int ii = 0; ii < kSliceCount; ++ii) {
                const Slice i = static_cast<Slice>(ii);
                const size_t idx = pair_index(inst, v, w, i);
                if (run.acc[idx] >= inst.packet(v, i).size_bits) {
                    run.delivered[idx] = 1;
                    ++run.delivered_count;
                }
            }
    return run;
}

Assignment induce_assignment(const VraInstance& inst, const Plan& plan) {
    const PlanRun run = run_plan(inst, plan);
    Assignment a(inst.m, inst.n, inst.freq_count, inst.horizon);
    for (int v = 0; v < inst.m; ++v)
        for (int ii = 0; ii < kSliceCount; ++ii) {
            const Slice i = static_cast<Slice>(ii);
            uint32_t delivered_mask = 0;
            for (int w = 0; w < inst.n; ++w)
                if (run.delivered[pair_index(inst, v, w, i)]) delivered_mask |= 1u << w;
            for (int w = 0; w < inst.n; ++w)
                if ((delivered_mask >> w) & 1u) a.y[a.y_index(v, w, i)] = 1;
            if (!delivered_mask) continue;
            for (int t = 1; t <= inst.horizon; ++t) {
                const EffAction& act = plan[static_cast<size_t>(t - 1)][static_cast<size_t>(v)];
                if (!act.active(i)) continue;
                const uint32_t served = act.target_bits & delivered_mask;
                if (!served) continue;  // slot helped no delivered pair; drop its power
                const int f = act.freq[static_cast<int>(i)];
                a.p[a.p_index(v, f, t, i)] = act.power_w[static_cast<int>(i)];
                for (int w = 0; w < inst.n; ++w)
                    if ((served >> w) & 1u) a.x[a.x_index(v, w, f, t, i)] = 1;
            }
        }
    return a;
}

}  // namespace vra
