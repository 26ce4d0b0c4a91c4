#include "vra/instance_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vra {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void parse_error(const std::string& what) {
    throw std::runtime_error("instance parse error: " + what);
}

std::istringstream expect_line(std::istream& is, const char* key) {
    std::string line;
    if (!std::getline(is, line)) parse_error(std::string("missing line: ") + key);
    std::istringstream ss(line);
    std::string token;
    ss >> token;
    if (token != key) parse_error("expected '" + std::string(key) + "', got '" + token + "'");
    return ss;
}

}  // namespace

void save_instance(std::ostream& os, const VraInstance& inst) {
    os << "vra-instance 1\n";
    os << "m " << inst.m << "\n";
    os << "n " << inst.n << "\n";
    os << "F " << inst.freq_count << "\n";
    os << "T " << inst.horizon << "\n";
    os << "tau_s " << fmt(inst.tau_s) << "\n";
    os << "beta_hz " << fmt(inst.beta_hz) << "\n";
    os << "oma " << (inst.oma ? 1 : 0) << "\n";
    os << "p_max_w";
    for (double p : inst.p_max_w) os << ' ' << fmt(p);
    os << "\n";
    os << "coverage_m";
    for (double c : inst.space.coverage_m) os << ' ' << fmt(c);
    os << "\n";
    os << "power_dbm";
    for (double p : inst.space.power_dbm) os << ' ' << fmt(p);
    os << "\n";
    for (const PacketSpec& pkt : inst.packets)
        os << "pkt " << pkt.owner << ' ' << slice_name(pkt.slice) << ' ' << fmt(pkt.size_bits)
           << ' ' << pkt.arrival_slot << ' ' << pkt.deadline_slot << "\n";
    for (int t = 1; t <= inst.horizon; ++t)
        for (int v = 0; v < inst.m; ++v)
            for (int w = 0; w < inst.n; ++w)
                for (int f = 0; f < inst.freq_count; ++f)
                    os << "g " << t << ' ' << v << ' ' << w << ' ' << f << ' '
                       << fmt(inst.gains[static_cast<size_t>(t - 1)].at(v, w, f)) << "\n";
    for (int v = 0; v < inst.m; ++v)
        for (int ci = 0; ci < inst.space.coverage_count(); ++ci)
            for (int t = 1; t <= inst.horizon; ++t)
                os << "tgt " << v << ' ' << ci << ' ' << t << ' '
                   << inst.target_mask(v, ci, t) << "\n";
    if (inst.has_agent_dists())
        for (int t = 1; t <= inst.horizon; ++t)
            for (int v = 0; v < inst.m; ++v)
                for (int v2 = 0; v2 < inst.m; ++v2)
                    os << "ad " << t << ' ' << v << ' ' << v2 << ' '
                       << fmt(inst.agent_distance(t, v, v2)) << "\n";
    os << "end\n";
}

VraInstance load_instance(std::istream& is) {
    {
        auto ss = expect_line(is, "vra-instance");
        int version = 0;
        ss >> version;
        if (version != 1) parse_error("unsupported version");
    }
    VraInstance inst;
    expect_line(is, "m") >> inst.m;
    expect_line(is, "n") >> inst.n;
    expect_line(is, "F") >> inst.freq_count;
    expect_line(is, "T") >> inst.horizon;
    expect_line(is, "tau_s") >> inst.tau_s;
    expect_line(is, "beta_hz") >> inst.beta_hz;
    int oma_flag = 0;
    expect_line(is, "oma") >> oma_flag;
    inst.oma = oma_flag != 0;
    {
        auto ss = expect_line(is, "p_max_w");
        double v;
        while (ss >> v) inst.p_max_w.push_back(v);
    }
    {
        auto ss = expect_line(is, "coverage_m");
        inst.space.coverage_m.clear();
        double v;
        while (ss >> v) inst.space.coverage_m.push_back(v);
    }
    {
        auto ss = expect_line(is, "power_dbm");
        inst.space.power_dbm.clear();
        double v;
        while (ss >> v) inst.space.power_dbm.push_back(v);
    }
    inst.space.freq_count = inst.freq_count;

    inst.packets.resize(static_cast<size_t>(2 * inst.m));
    std::vector<bool> have(inst.packets.size(), false);
    for (int k = 0; k < 2 * inst.m; ++k) {
        auto ss = expect_line(is, "pkt");
        PacketSpec pkt;
        std::string slice;
        ss >> pkt.owner >> slice >> pkt.size_bits >> pkt.arrival_slot >> pkt.deadline_slot;
        if (slice != "n" && slice != "s") parse_error("packet slice must be n or s");
        pkt.slice = slice == "s" ? Slice::safety : Slice::non_safety;
        const int idx = VraInstance::packet_index(pkt.owner, pkt.slice);
        if (idx < 0 || idx >= 2 * inst.m || have[static_cast<size_t>(idx)])
            parse_error("duplicate or out-of-range packet");
        inst.packets[static_cast<size_t>(idx)] = pkt;
        have[static_cast<size_t>(idx)] = true;
    }

    inst.gains.clear();
    for (int t = 1; t <= inst.horizon; ++t)
        inst.gains.emplace_back(inst.m, inst.n, inst.freq_count, t);
    const long gain_lines = static_cast<long>(inst.horizon) * inst.m * inst.n * inst.freq_count;
    for (long k = 0; k < gain_lines; ++k) {
        auto ss = expect_line(is, "g");
        int t, v, w, f;
        double value;
        ss >> t >> v >> w >> f >> value;
        inst.gains[static_cast<size_t>(t - 1)].at(v, w, f) = value;
    }

    inst.targets.assign(
        static_cast<size_t>(inst.m) * inst.space.coverage_count() * inst.horizon, 0);
    const long tgt_lines = static_cast<long>(inst.m) * inst.space.coverage_count() * inst.horizon;
    for (long k = 0; k < tgt_lines; ++k) {
        auto ss = expect_line(is, "tgt");
        int v, ci, t;
        uint32_t mask;
        ss >> v >> ci >> t >> mask;
        inst.targets[(static_cast<size_t>(v) * inst.space.coverage_count() + ci) * inst.horizon +
                     (t - 1)] = mask;
    }

    // Optional agent-distance block, then the end marker.
    std::string line;
    while (std::getline(is, line)) {
        if (line == "end") {
            inst.validate();
            return inst;
        }
        std::istringstream ss(line);
        std::string token;
        ss >> token;
        if (token != "ad") parse_error("unexpected line '" + line + "'");
        if (inst.agent_dists.empty())
            inst.agent_dists.assign(
                static_cast<size_t>(inst.horizon) * inst.m * inst.m, 0.0);
        int t, v, v2;
        double value;
        ss >> t >> v >> v2 >> value;
        inst.agent_dists[(static_cast<size_t>(t - 1) * inst.m + v) * inst.m + v2] = value;
    }
    parse_error("missing end marker");
}

void save_assignment(std::ostream& os, const Assignment& a) {
    os << "vra-assignment 1\n";
    os << "dims " << a.m << ' ' << a.n << ' ' << a.freq_count << ' ' << a.horizon << "\n";
    for (int v = 0; v < a.m; ++v)
        for (int w = 0; w < a.n; ++w)
            for (int f = 0; f < a.freq_count; ++f)
                for (int t = 1; t <= a.horizon; ++t)
                    for (int ii = 0; ii < kSliceCount; ++ii)
                        if (a.x_at(v, w, f, t, static_cast<Slice>(ii)))
                            os << "x " << v << ' ' << w << ' ' << f << ' ' << t << ' ' << ii
                               << "\n";
    for (int v = 0; v < a.m; ++v)
        for (int w = 0; w < a.n; ++w)
            for (int ii = 0; ii < kSliceCount; ++ii)
                if (a.y_at(v, w, static_cast<Slice>(ii)))
                    os << "y " << v << ' ' << w << ' ' << ii << "\n";
    for (int v = 0; v < a.m; ++v)
        for (int f = 0; f < a.freq_count; ++f)
            for (int t = 1; t <= a.horizon; ++t)
                for (int ii = 0; ii < kSliceCount; ++ii)
                    if (a.p_at(v, f, t, static_cast<Slice>(ii)) > 0.0)
                        os << "p " << v << ' ' << f << ' ' << t << ' ' << ii << ' '
                           << fmt(a.p_at(v, f, t, static_cast<Slice>(ii))) << "\n";
    os << "end\n";
}

Assignment load_assignment(std::istream& is) {
    {
        auto ss = expect_line(is, "vra-assignment");
        int version = 0;
        ss >> version;
        if (version != 1) parse_error("unsupported assignment version");
    }
    int m, n, F, T;
    expect_line(is, "dims") >> m >> n >> F >> T;
    Assignment a(m, n, F, T);
    std::string line;
    while (std::getline(is, line)) {
        if (line == "end") return a;
        std::istringstream ss(line);
        std::string token;
        ss >> token;
        if (token == "x") {
            int v, w, f, t, ii;
            ss >> v >> w >> f >> t >> ii;
            a.x[a.x_index(v, w, f, t, static_cast<Slice>(ii))] = 1;
        } else if (token == "y") {
            int v, w, ii;
            ss >> v >> w >> ii;
            a.y[a.y_index(v, w, static_cast<Slice>(ii))] = 1;
        } else if (token == "p") {
            int v, f, t, ii;
            double value;
            ss >> v >> f >> t >> ii >> value;
            a.p[a.p_index(v, f, t, static_cast<Slice>(ii))] = value;
        } else {
            parse_error("unexpected assignment line '" + line + "'");
        }
    }
    parse_error("missing end marker");
}

void save_instance_file(const std::string& path, const VraInstance& inst) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    save_instance(os, inst);
}

VraInstance load_instance_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return load_instance(is);
}

void save_assignment_file(const std::string& path, const Assignment& a) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    save_assignment(os, a);
}

}  // namespace vra
