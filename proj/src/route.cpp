#include "csfpga/route.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace csfpga {

double RoutedDesign::total_wirelength() const
{
    double wl = 0;
    for (const auto &r : routes)
        for (int node : r.tree_nodes)
            if (rrg->is_wire(node))
                wl += 1.0;
    return wl;
}

std::vector<NetTerminals> collect_terminals(const Netlist &n, const PackedNetlist &packed, const Placement &pl,
                                            const RrGraph &rrg)
{
    const FabricArch &arch = rrg.arch;
    auto io_sites = arch.io_sites();
    (void)io_sites;

    // net -> driver OPIN
    std::vector<int> source(n.net_count(), -1);
    for (size_t i = 0; i < n.inputs.size(); i++)
        source[n.inputs[i]] = rrg.io_opin(pl.input_pads[i].site, pl.input_pads[i].slot);
    for (size_t li = 0; li < n.luts.size(); li++) {
        auto [clb, ble] = packed.lut_slot[li];
        auto [x, y] = pl.clb_pos[clb];
        source[n.luts[li].out_net] = rrg.clb_opin(x, y, ble);
    }
    for (size_t li = 0; li < n.latches.size(); li++) {
        auto [clb, ble] = packed.latch_slot[li];
        auto [x, y] = pl.clb_pos[clb];
        // a registered BLE's output pin carries the latch Q
        source[n.latches[li].q_net] = rrg.clb_opin(x, y, ble);
    }

    std::map<int, NetTerminals> by_net;
    auto net_entry = [&](int net) -> NetTerminals & {
        auto it = by_net.find(net);
        if (it == by_net.end()) {
            NetTerminals t;
            t.net = net;
            t.source_node = source[net];
            it = by_net.emplace(net, std::move(t)).first;
        }
        return it->second;
    };

    for (size_t li = 0; li < n.luts.size(); li++) {
        auto [clb, ble] = packed.lut_slot[li];
        auto [x, y] = pl.clb_pos[clb];
        for (size_t i = 0; i < n.luts[li].fanin.size(); i++) {
            int net = n.luts[li].fanin[i];
            NetTerminals &t = net_entry(net);
            t.sink_nodes.push_back(rrg.clb_ipin(x, y, ble * arch.lut_inputs + int(i)));
            t.sink_refs.push_back({SinkRef::LutPin, int(li), int(i)});
        }
    }
    for (size_t li = 0; li < n.latches.size(); li++) {
        const auto &latch = n.latches[li];
        auto [clb, ble] = packed.latch_slot[li];
        const Ble &b = packed.clbs[clb].bles[ble];
        if (b.lut >= 0)
            continue; // fused: LUT output feeds the FF inside the BLE
        auto [x, y] = pl.clb_pos[clb];
        NetTerminals &t = net_entry(latch.d_net);
        t.sink_nodes.push_back(rrg.clb_ipin(x, y, ble * arch.lut_inputs + 0));
        t.sink_refs.push_back({SinkRef::LatchD, int(li), 0});
    }
    for (size_t i = 0; i < n.outputs.size(); i++) {
        int net = n.outputs[i];
        NetTerminals &t = net_entry(net);
        t.sink_nodes.push_back(rrg.io_ipin(pl.output_pads[i].site, pl.output_pads[i].slot));
        t.sink_refs.push_back({SinkRef::PrimaryOut, int(i), 0});
    }

    std::vector<NetTerminals> out;
    for (auto &[net, t] : by_net) {
        if (t.source_node < 0)
            throw ValidationError("route: net '" + n.net_names[net] + "' has no placed driver");
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct RouterState {
    const RrGraph &g;
    std::vector<int> occupancy;    // wires only (by node id)
    std::vector<double> history;   // accumulated congestion cost
    double pres_fac = 0.5;

    explicit RouterState(const RrGraph &g_) : g(g_), occupancy(g.nodes.size(), 0), history(g.nodes.size(), 0.0) {}

    double node_cost(int node, bool for_new_use) const
    {
        if (!g.is_wire(node))
            return 0.05; // pin hop, negligible but nonzero for tie-breaking
        int occ = occupancy[node] + (for_new_use ? 1 : 0);
        double present = 1.0 + pres_fac * std::max(0, occ - 1);
        return (1.0 + history[node]) * present;
    }
};

// multi-source Dijkstra from the current route tree to the nearest
// unreached sink; deterministic via (cost, node) ordering
struct PqItem {
    double cost;
    int node;
    bool operator>(const PqItem &o) const { return cost > o.cost || (cost == o.cost && node > o.node); }
};

bool dijkstra(const RouterState &st, const std::vector<int> &sources, const std::vector<char> &is_target,
              std::vector<int> &prev_edge, int &reached)
{
    const RrGraph &g = st.g;
    std::vector<double> dist(g.nodes.size(), std::numeric_limits<double>::max());
    prev_edge.assign(g.nodes.size(), -1);
    std::priority_queue<PqItem, std::vector<PqItem>, std::greater<PqItem>> pq;
    for (int s : sources) {
        dist[s] = 0.0;
        pq.push({0.0, s});
    }
    while (!pq.empty()) {
        auto [cost, node] = pq.top();
        pq.pop();
        if (cost > dist[node])
            continue;
        if (is_target[node]) {
            reached = node;
            return true;
        }
        for (int ei : g.out_edges[node]) {
            int to = g.edges[ei].to;
            double nc = cost + st.node_cost(to, true);
            if (nc < dist[to]) {
                dist[to] = nc;
                prev_edge[to] = ei;
                pq.push({nc, to});
            }
        }
    }
    return false;
}

NetRoute route_net(RouterState &st, const NetTerminals &t)
{
    const RrGraph &g = st.g;
    NetRoute r;
    r.net = t.net;
    r.source_node = t.source_node;
    r.tree_nodes.push_back(t.source_node);

    std::vector<char> in_tree(g.nodes.size(), 0);
    in_tree[t.source_node] = 1;
    std::vector<int> pending = t.sink_nodes;
    std::vector<char> is_target(g.nodes.size(), 0);
    std::map<int, int> parent_edge; // node -> edge used to enter it

    while (!pending.empty()) {
        for (int s : pending)
            is_target[s] = 1;
        std::vector<int> prev;
        int reached = -1;
        if (!dijkstra(st, r.tree_nodes, is_target, prev, reached))
            throw CongestionError("route: no path for net (disconnected rr graph?)", 0);
        for (int s : pending)
            is_target[s] = 0;
        // trace back to the tree
        std::vector<int> path_edges;
        int node = reached;
        while (prev[node] >= 0 && !in_tree[node]) {
            path_edges.push_back(prev[node]);
            node = g.edges[prev[node]].from;
        }
        std::reverse(path_edges.begin(), path_edges.end());
        for (int ei : path_edges) {
            int to = g.edges[ei].to;
            if (!in_tree[to]) {
                in_tree[to] = 1;
                r.tree_nodes.push_back(to);
                r.tree_edges.push_back(ei);
                parent_edge[to] = ei;
                if (g.is_wire(to))
                    st.occupancy[to]++;
            }
        }
        pending.erase(std::remove(pending.begin(), pending.end(), reached), pending.end());
    }

    // per-sink paths by walking parents back to the source
    for (size_t i = 0; i < t.sink_nodes.size(); i++) {
        SinkPath sp;
        sp.sink_node = t.sink_nodes[i];
        int node = sp.sink_node;
        while (node != t.source_node) {
            auto it = parent_edge.find(node);
            sp.edges.push_back(it->second);
            sp.nodes.push_back(node);
            node = g.edges[it->second].from;
        }
        sp.nodes.push_back(t.source_node);
        std::reverse(sp.nodes.begin(), sp.nodes.end());
        std::reverse(sp.edges.begin(), sp.edges.end());
        for (int ei : sp.edges) {
            if (g.edges[ei].kind == SwitchKind::Cb)
                sp.cb_taps++;
            else
                sp.sb_turns++;
        }
        r.sink_paths.push_back(std::move(sp));
    }
    return r;
}

void rip_up(RouterState &st, const NetRoute &r)
{
    for (int node : r.tree_nodes)
        if (st.g.is_wire(node) && st.occupancy[node] > 0)
            st.occupancy[node]--;
}

} // namespace

RoutedDesign route(const Netlist &n, const PackedNetlist &packed, const Placement &pl, const FabricArch &arch)
{
    auto rrg = std::make_shared<RrGraph>(build_rr_graph(arch));
    RoutedDesign rd;
    rd.netlist = n;
    rd.packed = packed;
    rd.placement = pl;
    rd.arch = arch;
    rd.rrg = rrg;
    rd.terminals = collect_terminals(n, packed, pl, *rrg);

    RouterState st(*rrg);
    rd.routes.assign(rd.terminals.size(), NetRoute{});

    const int max_iters = 50;
    int max_overuse = 0;
    for (int iter = 1; iter <= max_iters; iter++) {
        for (size_t i = 0; i < rd.terminals.size(); i++) {
            if (iter > 1)
                rip_up(st, rd.routes[i]);
            rd.routes[i] = route_net(st, rd.terminals[i]);
        }
        max_overuse = 0;
        for (size_t node = 0; node < rrg->nodes.size(); node++)
            if (rrg->is_wire(int(node)))
                max_overuse = std::max(max_overuse, st.occupancy[node] - 1);
        if (max_overuse <= 0)
            return rd;
        for (size_t node = 0; node < rrg->nodes.size(); node++)
            if (rrg->is_wire(int(node)) && st.occupancy[node] > 1)
                st.history[node] += double(st.occupancy[node] - 1);
        st.pres_fac *= 1.6;
    }
    throw CongestionError("route: unroutable after " + std::to_string(max_iters) + " iterations, max overuse " +
                          std::to_string(max_overuse),
                          max_overuse);
}

} // namespace csfpga
