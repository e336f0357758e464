#include "csfpga/pack.hpp"

#include <algorithm>
#include <set>

namespace csfpga {

int PackedNetlist::ble_count() const
{
    int n = 0;
    for (const auto &c : clbs)
        n += int(c.bles.size());
    return n;
}

namespace {

std::vector<std::set<int>> ble_nets(const Netlist &n, const std::vector<Ble> &bles)
{
    std::vector<std::set<int>> nets(bles.size());
    for (size_t i = 0; i < bles.size(); i++) {
        const Ble &b = bles[i];
        if (b.lut >= 0) {
            for (int f : n.luts[b.lut].fanin)
                nets[i].insert(f);
            nets[i].insert(n.luts[b.lut].out_net);
        }
        if (b.latch >= 0) {
            if (b.lut < 0)
                nets[i].insert(n.latches[b.latch].d_net);
            nets[i].insert(n.latches[b.latch].q_net);
        }
    }
    return nets;
}

int affinity(const std::set<int> &a, const std::set<int> &b)
{
    int shared = 0;
    for (int x : a)
        if (b.count(x))
            shared++;
    return shared;
}

std::vector<std::vector<int>> group_bles(const Netlist &n, const std::vector<Ble> &bles, int capacity,
                                         bool affinity_only)
{
    auto nets = ble_nets(n, bles);
    std::vector<bool> packed(bles.size(), false);
    std::vector<std::vector<int>> groups;

    size_t remaining = bles.size();
    while (remaining > 0) {
        // seed: unpacked BLE with the largest net footprint
        int seed = -1;
        for (size_t i = 0; i < bles.size(); i++) {
            if (packed[i])
                continue;
            if (seed < 0 || nets[i].size() > nets[seed].size())
                seed = int(i);
        }
        std::vector<int> group{seed};
        packed[seed] = true;
        remaining--;
        std::set<int> group_nets = nets[seed];

        while (int(group.size()) < capacity && remaining > 0) {
            int best = -1, best_aff = affinity_only ? 0 : -1;
            for (size_t i = 0; i < bles.size(); i++) {
                if (packed[i])
                    continue;
                int a = affinity(group_nets, nets[i]);
                if (a > best_aff) {
                    best_aff = a;
                    best = int(i);
                }
            }
            if (best < 0)
                break;
            group.push_back(best);
            packed[best] = true;
            remaining--;
            group_nets.insert(nets[best].begin(), nets[best].end());
        }
        groups.push_back(group);
    }
    return groups;
}

} // namespace

PackedNetlist pack(const Netlist &n, const FabricArch &arch)
{
    if (n.max_fanin() > arch.lut_inputs)
        throw ResourceError("pack: netlist arity " + std::to_string(n.max_fanin()) + " exceeds fabric k=" +
                            std::to_string(arch.lut_inputs));

    // fanout per net, to decide LUT/latch fusion
    std::vector<int> fanout(n.net_count(), 0);
    std::vector<bool> is_po(n.net_count(), false);
    for (const auto &l : n.luts)
        for (int f : l.fanin)
            fanout[f]++;
    for (const auto &l : n.latches)
        fanout[l.d_net]++;
    for (int o : n.outputs)
        is_po[o] = true;

    std::vector<int> lut_driving(n.net_count(), -1);
    for (size_t i = 0; i < n.luts.size(); i++)
        lut_driving[n.luts[i].out_net] = int(i);

    std::vector<Ble> bles;
    std::vector<int> lut_ble(n.luts.size(), -1), latch_ble(n.latches.size(), -1);
    std::vector<bool> lut_fused(n.luts.size(), false);
    for (size_t li = 0; li < n.latches.size(); li++) {
        const LatchNode &latch = n.latches[li];
        int d = latch.d_net;
        int driver_lut = lut_driving[d];
        if (driver_lut >= 0 && fanout[d] == 1 && !is_po[d]) {
            lut_fused[driver_lut] = true;
            lut_ble[driver_lut] = int(bles.size());
            latch_ble[li] = int(bles.size());
            bles.push_back({driver_lut, int(li)});
        } else {
            latch_ble[li] = int(bles.size());
            bles.push_back({-1, int(li)});
        }
    }
    for (size_t i = 0; i < n.luts.size(); i++) {
        if (lut_fused[i])
            continue;
        lut_ble[i] = int(bles.size());
        bles.push_back({int(i), -1});
    }

    int capacity = arch.cluster_size;
    auto groups = group_bles(n, bles, capacity, true);
    if (int(groups.size()) > arch.clb_sites())
        groups = group_bles(n, bles, capacity, false); // dense fallback
    if (int(groups.size()) > arch.clb_sites())
        throw ResourceError("pack: need " + std::to_string(groups.size()) + " CLBs but grid has " +
                            std::to_string(arch.clb_sites()) + " sites");

    PackedNetlist p;
    p.lut_slot.assign(n.luts.size(), {-1, -1});
    p.latch_slot.assign(n.latches.size(), {-1, -1});
    for (const auto &group : groups) {
        PackedClb clb;
        int ci = int(p.clbs.size());
        for (int bi : group) {
            int slot = int(clb.bles.size());
            const Ble &b = bles[bi];
            if (b.lut >= 0)
                p.lut_slot[b.lut] = {ci, slot};
            if (b.latch >= 0)
                p.latch_slot[b.latch] = {ci, slot};
            clb.bles.push_back(b);
        }
        p.clbs.push_back(clb);
    }
    return p;
}

} // namespace csfpga
