#include "vra/mis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vra {

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.first == v) + (e.second == v);
    return d;
}

bool is_connected(const Graph& g) {
    if (g.nv <= 1) return true;
    std::vector<int> stack = {0};
    std::vector<bool> seen(static_cast<size_t>(g.nv), false);
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges) {
            int other = -1;
            if (e.first == u) other = e.second;
            else if (e.second == u) other = e.first;
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = true;
                ++visited;
                stack.push_back(other);
            }
        }
    }
    return visited == g.nv;
}

int max_independent_set_size(const Graph& g) {
    if (g.nv > 30) throw std::invalid_argument("exhaustive MIS supports at most 30 vertices");
    std::vector<uint32_t> adj(static_cast<size_t>(g.nv), 0);
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e.first)] |= 1u << e.second;
        adj[static_cast<size_t>(e.second)] |= 1u << e.first;
    }
    int best = 0;
    for (uint32_t subset = 0; subset < (1u << g.nv); ++subset) {
        bool independent = true;
        for (int v = 0; v < g.nv && independent; ++v)
            if ((subset >> v) & 1u)
                if (adj[static_cast<size_t>(v)] & subset) independent = false;
        if (independent) best = std::max(best, __builtin_popcount(subset));
    }
    return best;
}

VraInstance mis_reduce(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("mis_reduce requires at least one edge");
    for (const auto& e : g.edges)
        if (e.first < 0 || e.second < 0 || e.first >= g.nv || e.second >= g.nv ||
            e.first == e.second)
            throw std::invalid_argument("mis_reduce requires a simple graph");
    for (int v = 0; v < g.nv; ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("mis_reduce requires no isolated vertices");

    VraInstance inst;
    inst.m = g.nv;
    inst.n = 1;
    inst.freq_count = 1;
    inst.horizon = static_cast<int>(g.edges.size());
    inst.tau_s = 1.0;
    inst.beta_hz = 1.0;  // one bit per scheduled slot: beta*tau*log2(2) = 1
    inst.oma = true;
    inst.p_max_w.assign(static_cast<size_t>(inst.m), 1.0);
    inst.space.coverage_m = {0.0, 1.0};
    inst.space.power_dbm = {ActionSpace::kSilentDbm, 30.0};  // 30 dBm is exactly 1 W
    inst.space.freq_count = 1;

    inst.packets.resize(static_cast<size_t>(2 * inst.m));
    for (int v = 0; v < inst.m; ++v) {
        PacketSpec non_safety;
        non_safety.owner = v;
        non_safety.slice = Slice::non_safety;
        non_safety.size_bits = 1e18;  // out of reach: the restriction has no non-safety slice
        non_safety.arrival_slot = 1;
        non_safety.deadline_slot = inst.horizon;
        inst.packets[static_cast<size_t>(VraInstance::packet_index(v, Slice::non_safety))] =
            non_safety;

        PacketSpec safety;
        safety.owner = v;
        safety.slice = Slice::safety;
        safety.size_bits = static_cast<double>(g.degree(v));
        safety.arrival_slot = 1;
        safety.deadline_slot = inst.horizon;
        inst.packets[static_cast<size_t>(VraInstance::packet_index(v, Slice::safety))] = safety;
    }

    inst.gains.reserve(static_cast<size_t>(inst.horizon));
    for (int t = 1; t <= inst.horizon; ++t) {
        ChannelTensor tensor(inst.m, 1, 1, t);
        const auto& e = g.edges[static_cast<size_t>(t - 1)];
        tensor.at(e.first, 0, 0) = 1.0;
        tensor.at(e.second, 0, 0) = 1.0;
        inst.gains.push_back(std::move(tensor));
    }

    inst.targets.assign(
        static_cast<size_t>(inst.m) * inst.space.coverage_count() * inst.horizon, 0);
    for (int v = 0; v < inst.m; ++v)
        for (int t = 1; t <= inst.horizon; ++t)
            inst.targets[(static_cast<size_t>(v) * inst.space.coverage_count() + 1) *
                             inst.horizon +
                         (t - 1)] = 1u;
    return inst;
}

namespace {

uint64_t edge_bit(int nv, int a, int b) {
    if (a > b) std::swap(a, b);
    // position of edge (a,b) in the lexicographic pair ordering
    int pos = 0;
    for (int i = 0; i < a; ++i) pos += nv - 1 - i;
    pos += b - a - 1;
    return 1ull << pos;
}

uint64_t canonical_mask(int nv, uint64_t mask) {
    std::vector<int> perm(static_cast<size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t relabeled = 0;
        int pos = 0;
        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b, ++pos)
                if ((mask >> pos) & 1ull)
                    relabeled |= edge_bit(nv, perm[static_cast<size_t>(a)],
                                          perm[static_cast<size_t>(b)]);
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int max_vertices) {
    std::vector<Graph> out;
    for (int nv = 2; nv <= max_vertices; ++nv) {
        const int ne = nv * (nv - 1) / 2;
        std::vector<uint64_t> seen;
        for (uint64_t mask = 1; mask < (1ull << ne); ++mask) {
            Graph g;
            g.nv = nv;
            int pos = 0;
            for (int a = 0; a < nv; ++a)
                for (int b = a + 1; b < nv; ++b, ++pos)
                    if ((mask >> pos) & 1ull) g.edges.emplace_back(a, b);
            if (!is_connected(g)) continue;
            const uint64_t canon = canonical_mask(nv, mask);
            if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
            seen.push_back(canon);
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace vra
