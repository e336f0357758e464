#include "csfpga/place.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace csfpga {

namespace {

// terminals of every net at CLB granularity (pads handled separately)
struct NetPins {
    std::vector<std::vector<int>> net_clbs; // net -> clb indices (deduped)
    std::vector<int> pi_net_of_input;       // PI ordinal -> net
    std::vector<int> po_net_of_output;      // PO ordinal -> net
};

NetPins collect_pins(const PackedNetlist &packed, const Netlist &n)
{
    NetPins np;
    np.net_clbs.resize(n.net_count());
    auto touch = [&](int net, int clb) {
        auto &v = np.net_clbs[net];
        if (std::find(v.begin(), v.end(), clb) == v.end())
            v.push_back(clb);
    };
    for (size_t li = 0; li < n.luts.size(); li++) {
        auto [clb, ble] = packed.lut_slot[li];
        (void)ble;
        for (int f : n.luts[li].fanin)
            touch(f, clb);
        touch(n.luts[li].out_net, clb);
    }
    for (size_t li = 0; li < n.latches.size(); li++) {
        auto [clb, ble] = packed.latch_slot[li];
        (void)ble;
        touch(n.latches[li].d_net, clb);
        touch(n.latches[li].q_net, clb);
    }
    np.pi_net_of_input = n.inputs;
    np.po_net_of_output = n.outputs;
    return np;
}

double net_hpwl(const std::vector<std::pair<int, int>> &pos, const std::vector<int> &clbs)
{
    if (clbs.size() < 2)
        return 0.0;
    int xmin = pos[clbs[0]].first, xmax = xmin, ymin = pos[clbs[0]].second, ymax = ymin;
    for (size_t i = 1; i < clbs.size(); i++) {
        auto [x, y] = pos[clbs[i]];
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    return double(xmax - xmin) + double(ymax - ymin);
}

double total_hpwl(const std::vector<std::pair<int, int>> &pos, const NetPins &np)
{
    double c = 0;
    for (const auto &clbs : np.net_clbs)
        c += net_hpwl(pos, clbs);
    return c;
}

} // namespace

Placement place(const PackedNetlist &packed, const Netlist &n, const FabricArch &arch, uint64_t seed)
{
    int n_clbs = int(packed.clbs.size());
    if (n_clbs > arch.clb_sites())
        throw ResourceError("place: " + std::to_string(n_clbs) + " CLBs exceed " +
                            std::to_string(arch.clb_sites()) + " sites");
    auto io_sites = arch.io_sites();
    int pad_slots = int(io_sites.size()) * arch.io_capacity;
    if (int(n.inputs.size() + n.outputs.size()) > pad_slots)
        throw ResourceError("place: " + std::to_string(n.inputs.size() + n.outputs.size()) +
                            " IOs exceed " + std::to_string(pad_slots) + " pad slots");

    NetPins np = collect_pins(packed, n);
    std::mt19937_64 rng(seed);

    // sites in row-major order; CLB i starts at site i, then anneal
    std::vector<std::pair<int, int>> sites;
    for (int y = 1; y <= arch.height; y++)
        for (int x = 1; x <= arch.width; x++)
            sites.push_back({x, y});
    std::vector<int> site_of_clb(n_clbs);
    std::vector<int> clb_at_site(sites.size(), -1);
    for (int i = 0; i < n_clbs; i++) {
        site_of_clb[i] = i;
        clb_at_site[i] = i;
    }

    Placement pl;
    pl.clb_pos.resize(n_clbs);
    auto sync_pos = [&]() {
        for (int i = 0; i < n_clbs; i++)
            pl.clb_pos[i] = sites[site_of_clb[i]];
    };
    sync_pos();

    double cost = total_hpwl(pl.clb_pos, np);

    auto try_move = [&](int clb, int target_site, double temp) {
        int old_site = site_of_clb[clb];
        if (old_site == target_site)
            return;
        int other = clb_at_site[target_site];
        // apply
        site_of_clb[clb] = target_site;
        clb_at_site[target_site] = clb;
        clb_at_site[old_site] = other;
        if (other >= 0)
            site_of_clb[other] = old_site;
        sync_pos();
        double new_cost = total_hpwl(pl.clb_pos, np);
        double delta = new_cost - cost;
        bool accept = delta < 0;
        if (!accept && temp > 0) {
            double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            accept = u < std::exp(-delta / temp);
        }
        if (accept) {
            cost = new_cost;
        } else { // revert
            site_of_clb[clb] = old_site;
            clb_at_site[old_site] = clb;
            clb_at_site[target_site] = other;
            if (other >= 0)
                site_of_clb[other] = target_site;
            sync_pos();
        }
    };

    if (n_clbs > 1 && sites.size() > 1) {
        // fixed schedule: T0 scaled to initial cost, 120 steps, alpha 0.93,
        // moves per step proportional to design size
        double temp = std::max(1.0, 0.5 * cost);
        int moves_per_step = std::max(16, 8 * n_clbs);
        std::uniform_int_distribution<int> pick_clb(0, n_clbs - 1);
        std::uniform_int_distribution<int> pick_site(0, int(sites.size()) - 1);
        for (int step = 0; step < 120; step++) {
            for (int m = 0; m < moves_per_step; m++)
                try_move(pick_clb(rng), pick_site(rng), temp);
            temp *= 0.93;
        }
        // greedy descent to a local minimum
        for (int pass = 0; pass < 10; pass++) {
            double before = cost;
            for (int c = 0; c < n_clbs; c++)
                for (size_t s = 0; s < sites.size(); s++)
                    try_move(c, int(s), 0.0);
            if (cost >= before)
                break;
        }
    }

    // greedy pad assignment: nearest free slot to the net's logic terminals
    std::vector<int> used(io_sites.size(), 0);
    auto assign_pad = [&](int net) -> PadLoc {
        double cx = 0, cy = 0;
        const auto &clbs = np.net_clbs[net];
        if (!clbs.empty()) {
            for (int c : clbs) {
                cx += pl.clb_pos[c].first;
                cy += pl.clb_pos[c].second;
            }
            cx /= clbs.size();
            cy /= clbs.size();
        }
        int best_site = -1;
        double best_d = std::numeric_limits<double>::max();
        for (size_t s = 0; s < io_sites.size(); s++) {
            if (used[s] >= arch.io_capacity)
                continue;
            double d = std::fabs(io_sites[s].x - cx) + std::fabs(io_sites[s].y - cy);
            if (d < best_d - 1e-12) {
                best_d = d;
                best_site = int(s);
            }
        }
        PadLoc loc{best_site, used[best_site]};
        used[best_site]++;
        return loc;
    };
    for (int net : np.pi_net_of_input)
        pl.input_pads.push_back(assign_pad(net));
    for (int net : np.po_net_of_output)
        pl.output_pads.push_back(assign_pad(net));

    pl.hpwl = placement_hpwl(pl, packed, n, arch);
    return pl;
}

double placement_hpwl(const Placement &pl, const PackedNetlist &packed, const Netlist &n, const FabricArch &arch)
{
    NetPins np = collect_pins(packed, n);
    auto io_sites = arch.io_sites();
    double c = 0;
    for (int net = 0; net < n.net_count(); net++) {
        std::vector<std::pair<int, int>> pts;
        for (int clb : np.net_clbs[net])
            pts.push_back(pl.clb_pos[clb]);
        for (size_t i = 0; i < n.inputs.size(); i++)
            if (n.inputs[i] == net && pl.input_pads[i].site >= 0)
                pts.push_back({io_sites[pl.input_pads[i].site].x, io_sites[pl.input_pads[i].site].y});
        for (size_t i = 0; i < n.outputs.size(); i++)
            if (n.outputs[i] == net && pl.output_pads[i].site >= 0)
                pts.push_back({io_sites[pl.output_pads[i].site].x, io_sites[pl.output_pads[i].site].y});
        if (pts.size() < 2)
            continue;
        int xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
        for (const auto &[x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        c += double(xmax - xmin) + double(ymax - ymin);
    }
    return c;
}

} // namespace csfpga
