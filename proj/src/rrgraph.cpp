#include "csfpga/rrgraph.hpp"

#include <algorithm>
#include <sstream>

namespace csfpga {

std::string RrNode::describe() const
{
    std::ostringstream os;
    switch (type) {
    case RrType::Opin:
        os << (is_io ? "io_opin" : "opin") << "(" << x << "," << y << ")";
        if (is_io)
            os << "." << io_slot;
        else
            os << ".ble" << pin;
        break;
    case RrType::Ipin:
        os << (is_io ? "io_ipin" : "ipin") << "(" << x << "," << y << ")";
        if (is_io)
            os << "." << io_slot;
        else
            os << ".p" << pin;
        break;
    case RrType::Wire:
        os << (axis == ChanAxis::X ? "chanx" : "chany") << "(" << x << "," << y << ").t" << track;
        break;
    }
    return os.str();
}

namespace {

struct Builder {
    const FabricArch &arch;
    RrGraph g;
    int clb_pins_per_block;
    int io_base = 0;
    int wire_base = 0;
    int chanx_count = 0;

    explicit Builder(const FabricArch &a) : arch(a), g{a, {}, {}, {}, 0, 0, 0}
    {
        clb_pins_per_block = a.cluster_size + a.cluster_size * a.lut_inputs;
    }

    // deterministic Fc track subset for a pin ordinal
    std::vector<int> fc_subset(int ordinal) const
    {
        int wc = arch.channel_width;
        int n = arch.fc_tracks();
        std::vector<int> tracks;
        for (int j = 0; j < n; j++)
            tracks.push_back((ordinal + j) % wc);
        std::sort(tracks.begin(), tracks.end());
        return tracks;
    }

    void add_edge(int from, int to, SwitchKind kind, int switch_id)
    {
        g.edges.push_back({from, to, kind, switch_id});
    }

    void build_nodes()
    {
        const auto &a = arch;
        for (int y = 1; y <= a.height; y++) {
            for (int x = 1; x <= a.width; x++) {
                for (int b = 0; b < a.cluster_size; b++)
                    g.nodes.push_back({RrType::Opin, x, y, b, false, 0, ChanAxis::X, 0});
                for (int p = 0; p < a.cluster_size * a.lut_inputs; p++)
                    g.nodes.push_back({RrType::Ipin, x, y, p, false, 0, ChanAxis::X, 0});
            }
        }
        io_base = int(g.nodes.size());
        auto sites = a.io_sites();
        for (size_t s = 0; s < sites.size(); s++) {
            for (int l = 0; l < a.io_capacity; l++) {
                g.nodes.push_back({RrType::Opin, sites[s].x, sites[s].y, 0, true, l, ChanAxis::X, 0});
                g.nodes.push_back({RrType::Ipin, sites[s].x, sites[s].y, 0, true, l, ChanAxis::X, 0});
            }
        }
        wire_base = int(g.nodes.size());
        for (int y = 0; y <= a.height; y++)
            for (int x = 1; x <= a.width; x++)
                for (int t = 0; t < a.channel_width; t++)
                    g.nodes.push_back({RrType::Wire, x, y, 0, false, 0, ChanAxis::X, t});
        chanx_count = (a.height + 1) * a.width * a.channel_width;
        for (int x = 0; x <= a.width; x++)
            for (int y = 1; y <= a.height; y++)
                for (int t = 0; t < a.channel_width; t++)
                    g.nodes.push_back({RrType::Wire, x, y, 0, false, 0, ChanAxis::Y, t});
        g.n_wires = int(g.nodes.size()) - wire_base;
    }

    int wire(ChanAxis axis, int x, int y, int t) const
    {
        const auto &a = arch;
        if (axis == ChanAxis::X)
            return wire_base + (y * a.width + (x - 1)) * a.channel_width + t;
        return wire_base + chanx_count + (x * a.height + (y - 1)) * a.channel_width + t;
    }

    // the four channels around a CLB, fixed order: below, above, left, right
    std::vector<std::pair<ChanAxis, std::pair<int, int>>> clb_channels(int x, int y) const
    {
        return {{ChanAxis::X, {x, y - 1}},
                {ChanAxis::X, {x, y}},
                {ChanAxis::Y, {x - 1, y}},
                {ChanAxis::Y, {x, y}}};
    }

    std::pair<ChanAxis, std::pair<int, int>> io_channel(const FabricArch::IoSite &s) const
    {
        const auto &a = arch;
        if (s.y == 0)
            return {ChanAxis::X, {s.x, 0}};
        if (s.y == a.height + 1)
            return {ChanAxis::X, {s.x, a.height}};
        if (s.x == 0)
            return {ChanAxis::Y, {0, s.y}};
        return {ChanAxis::Y, {a.width, s.y}};
    }

    void build_cb_edges()
    {
        const auto &a = arch;
        int &cb = g.n_cb_switches;
        for (int y = 1; y <= a.height; y++) {
            for (int x = 1; x <= a.width; x++) {
                auto chans = clb_channels(x, y);
                int n_in = a.cluster_size * a.lut_inputs;
                for (int p = 0; p < n_in; p++) {
                    int ipin = g.clb_ipin(x, y, p);
                    for (const auto &[axis, cxy] : chans)
                        for (int t : fc_subset(p))
                            add_edge(wire(axis, cxy.first, cxy.second, t), ipin, SwitchKind::Cb, cb++);
                }
                for (int b = 0; b < a.cluster_size; b++) {
                    int opin = g.clb_opin(x, y, b);
                    for (const auto &[axis, cxy] : chans)
                        for (int t : fc_subset(n_in + b))
                            add_edge(opin, wire(axis, cxy.first, cxy.second, t), SwitchKind::Cb, cb++);
                }
            }
        }
        auto sites = a.io_sites();
        for (size_t s = 0; s < sites.size(); s++) {
            auto [axis, cxy] = io_channel(sites[s]);
            for (int l = 0; l < a.io_capacity; l++) {
                int opin = g.io_opin(int(s), l);
                for (int t : fc_subset(l))
                    add_edge(opin, wire(axis, cxy.first, cxy.second, t), SwitchKind::Cb, cb++);
                int ipin = g.io_ipin(int(s), l);
                for (int t : fc_subset(l))
                    add_edge(wire(axis, cxy.first, cxy.second, t), ipin, SwitchKind::Cb, cb++);
            }
        }
    }

    // track permutation through a switch box; straight connections keep
    // the track, turns rotate by one in the wilton-style pattern
    int perm(bool straight, int t) const
    {
        if (arch.sb_pattern == SbPattern::Disjoint || straight)
            return t;
        return (t + 1) % arch.channel_width;
    }

    void build_sb_edges()
    {
        const auto &a = arch;
        int sb = 0;
        for (int j = 0; j <= a.height; j++) {
            for (int i = 0; i <= a.width; i++) {
                // incident wires: west/east chanx, south/north chany
                auto side = [&](int which) -> int {
                    switch (which) {
                    case 0: return i >= 1 ? 0 : -1;          // west  chanx(i, j)
                    case 1: return i + 1 <= a.width ? 0 : -1; // east  chanx(i+1, j)
                    case 2: return j >= 1 ? 0 : -1;          // south chany(i, j)
                    default: return j + 1 <= a.height ? 0 : -1; // north chany(i, j+1)
                    }
                };
                auto side_wire = [&](int which, int t) -> int {
                    switch (which) {
                    case 0: return wire(ChanAxis::X, i, j, t);
                    case 1: return wire(ChanAxis::X, i + 1, j, t);
                    case 2: return wire(ChanAxis::Y, i, j, t);
                    default: return wire(ChanAxis::Y, i, j + 1, t);
                    }
                };
                // pair order: straights (W,E) (S,N), then turns
                static const int pairs[6][3] = {{0, 1, 1}, {2, 3, 1}, {0, 3, 0}, {3, 1, 0}, {1, 2, 0}, {2, 0, 0}};
                for (const auto &pr : pairs) {
                    if (side(pr[0]) < 0 || side(pr[1]) < 0)
                        continue;
                    for (int t = 0; t < a.channel_width; t++) {
                        int t2 = perm(pr[2] == 1, t);
                        int na = side_wire(pr[0], t);
                        int nb = side_wire(pr[1], t2);
                        int id = g.n_cb_switches + sb;
                        add_edge(na, nb, SwitchKind::Sb, id);
                        add_edge(nb, na, SwitchKind::Sb, id);
                        sb++;
                    }
                }
            }
        }
        g.n_sb_switches = sb;
    }

    RrGraph finish()
    {
        g.out_edges.resize(g.nodes.size());
        for (size_t e = 0; e < g.edges.size(); e++)
            g.out_edges[g.edges[e].from].push_back(int(e));
        return std::move(g);
    }
};

} // namespace

int RrGraph::clb_opin(int x, int y, int ble) const
{
    int per_block = arch.cluster_size + arch.cluster_size * arch.lut_inputs;
    int idx = (y - 1) * arch.width + (x - 1);
    return idx * per_block + ble;
}

int RrGraph::clb_ipin(int x, int y, int pin) const
{
    int per_block = arch.cluster_size + arch.cluster_size * arch.lut_inputs;
    int idx = (y - 1) * arch.width + (x - 1);
    return idx * per_block + arch.cluster_size + pin;
}

int RrGraph::io_opin(int site_index, int slot) const
{
    int per_block = arch.cluster_size + arch.cluster_size * arch.lut_inputs;
    int io_base = arch.clb_sites() * per_block;
    return io_base + (site_index * arch.io_capacity + slot) * 2;
}

int RrGraph::io_ipin(int site_index, int slot) const { return io_opin(site_index, slot) + 1; }

int RrGraph::wire_node(ChanAxis axis, int x, int y, int track) const
{
    int per_block = arch.cluster_size + arch.cluster_size * arch.lut_inputs;
    int wire_base = arch.clb_sites() * per_block + int(arch.io_sites().size()) * arch.io_capacity * 2;
    int chanx_count = (arch.height + 1) * arch.width * arch.channel_width;
    if (axis == ChanAxis::X)
        return wire_base + (y * arch.width + (x - 1)) * arch.channel_width + track;
    return wire_base + chanx_count + (x * arch.height + (y - 1)) * arch.channel_width + track;
}

RrGraph build_rr_graph(const FabricArch &arch)
{
    arch.validate();
    Builder b(arch);
    b.build_nodes();
    b.build_cb_edges();
    b.build_sb_edges();
    return b.finish();
}

} // namespace csfpga
