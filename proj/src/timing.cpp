#include "csfpga/timing.hpp"

#include <algorithm>
#include <map>

namespace csfpga {

namespace {

std::string format_route_hop(const Netlist &n, int net) { return "net " + n.net_names[net]; }

} // namespace

TimingReport timing_analyze_core(const Netlist &n, const TechModel &tech, const EdgeDelayFn &edge_delay)
{
    double lut_delay = primitive_cost(tech, PrimitiveKind::Lut6, tech.default_mode).delay;

    std::vector<int> order = n.topo_order();
    std::vector<double> arrival(n.net_count(), 0.0);
    // critical fanin index per lut, for the breakdown backtrace
    std::vector<int> crit_fanin(n.luts.size(), -1);
    std::vector<int> driver_lut(n.net_count(), -1);
    for (size_t i = 0; i < n.luts.size(); i++)
        driver_lut[n.luts[i].out_net] = int(i);

    for (int li : order) {
        const LutNode &l = n.luts[li];
        double best = 0.0;
        int best_i = -1;
        for (size_t i = 0; i < l.fanin.size(); i++) {
            double a = arrival[l.fanin[i]] + edge_delay(l.fanin[i], {SinkRef::LutPin, li, int(i)});
            if (best_i < 0 || a > best) {
                best = a;
                best_i = int(i);
            }
        }
        crit_fanin[li] = best_i;
        arrival[l.out_net] = (best_i < 0 ? 0.0 : best) + lut_delay;
    }

    TimingReport rep;
    struct Ep {
        std::string name;
        double arrival;
        int net;
        SinkRef sink;
    };
    std::vector<Ep> eps;
    for (size_t i = 0; i < n.outputs.size(); i++) {
        int net = n.outputs[i];
        SinkRef ref{SinkRef::PrimaryOut, int(i), 0};
        eps.push_back({"po " + n.net_names[net], arrival[net] + edge_delay(net, ref), net, ref});
    }
    for (size_t i = 0; i < n.latches.size(); i++) {
        int net = n.latches[i].d_net;
        SinkRef ref{SinkRef::LatchD, int(i), 0};
        eps.push_back({"ff " + n.latches[i].name, arrival[net] + edge_delay(net, ref), net, ref});
    }

    int crit = -1;
    for (size_t i = 0; i < eps.size(); i++)
        if (crit < 0 || eps[i].arrival > eps[crit].arrival)
            crit = int(i);
    rep.critical_path = crit < 0 ? 0.0 : eps[crit].arrival;
    for (const auto &e : eps)
        rep.endpoints.push_back({e.name, e.arrival, rep.critical_path - e.arrival});

    if (crit >= 0) {
        // walk back from the critical endpoint collecting elements, then
        // emit them source-first so the sum associates exactly like the
        // forward arrival computation
        std::vector<TimingReport::PathElem> rev;
        int net = eps[crit].net;
        rev.push_back({"routing to " + eps[crit].name + " (" + format_route_hop(n, net) + ")",
                       edge_delay(net, eps[crit].sink), false});
        while (driver_lut[net] >= 0) {
            int li = driver_lut[net];
            rev.push_back({"lut " + n.luts[li].name, lut_delay, true});
            int fi = crit_fanin[li];
            if (fi < 0)
                break;
            int fanin_net = n.luts[li].fanin[fi];
            rev.push_back({"routing " + format_route_hop(n, fanin_net) + " -> lut " + n.luts[li].name,
                           edge_delay(fanin_net, {SinkRef::LutPin, li, fi}), false});
            net = fanin_net;
        }
        std::reverse(rev.begin(), rev.end());
        rep.breakdown = std::move(rev);
        double cp = 0, lut_sum = 0, route_sum = 0;
        for (const auto &e : rep.breakdown) {
            cp += e.delay;
            if (e.is_lut)
                lut_sum += e.delay;
            else
                route_sum += e.delay;
        }
        rep.critical_path = cp; // identical association order as above
        rep.lut_total = lut_sum;
        rep.routing_total = route_sum;
        for (auto &e : rep.endpoints)
            e.slack = rep.critical_path - e.arrival;
    }
    return rep;
}

TimingReport timing_analyze(const RoutedDesign &rd, const TechModel &tech)
{
    double cb_delay = primitive_cost(tech, PrimitiveKind::CbSwitch, tech.default_mode).delay;
    double sb_delay = primitive_cost(tech, PrimitiveKind::SbSwitch, tech.default_mode).delay;

    // (net, sink kind, index, pin) -> switch counts
    std::map<std::tuple<int, int, int, int>, std::pair<int, int>> counts;
    for (size_t i = 0; i < rd.terminals.size(); i++) {
        const NetTerminals &t = rd.terminals[i];
        const NetRoute &r = rd.routes[i];
        for (size_t j = 0; j < t.sink_refs.size(); j++) {
            const SinkRef &ref = t.sink_refs[j];
            counts[{t.net, int(ref.kind), ref.index, ref.pin}] = {r.sink_paths[j].cb_taps,
                                                                  r.sink_paths[j].sb_turns};
        }
    }
    auto edge_delay = [&](int net, const SinkRef &ref) -> double {
        auto it = counts.find({net, int(ref.kind), ref.index, ref.pin});
        if (it == counts.end())
            return 0.0; // BLE-internal connection
        return it->second.first * cb_delay + it->second.second * sb_delay;
    };
    return timing_analyze_core(rd.netlist, tech, edge_delay);
}

} // namespace csfpga
