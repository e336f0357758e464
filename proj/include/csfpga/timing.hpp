#pragma once

#include <functional>
#include <string>
#include <vector>

#include "csfpga/route.hpp"
#include "csfpga/techlib.hpp"

namespace csfpga {

struct TimingReport {
    double critical_path = 0.0; // seconds
    double lut_total = 0.0;     // LUT portion of the critical path
    double routing_total = 0.0; // CB/SB portion of the critical path

    struct PathElem {
        std::string what;
        double delay = 0.0;
        bool is_lut = false;
    };
    std::vector<PathElem> breakdown; // critical path, source to endpoint

    struct Endpoint {
        std::string name;
        double arrival = 0.0;
        double slack = 0.0;
    };
    std::vector<Endpoint> endpoints;
};

// Routing delay seen by one sink of a net: switch counts scaled by the
// tech model's CB/SB entries.
using EdgeDelayFn = std::function<double(int net, const SinkRef &sink)>;

// Longest-path analysis over the combinational DAG. Node delay is the tech
// LUT6 read delay at the model's native mode; edge delays come from the
// callback (zero when a sink is internal to a BLE).
TimingReport timing_analyze_core(const Netlist &n, const TechModel &tech, const EdgeDelayFn &edge_delay);

// Edge delays derived from the routed switch counts:
// (#CB taps) * cb_delay + (#SB turns) * sb_delay.
TimingReport timing_analyze(const RoutedDesign &rd, const TechModel &tech);

} // namespace csfpga
