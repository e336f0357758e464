#pragma once

#include <map>
#include <memory>
#include <vector>

#include "csfpga/place.hpp"
#include "csfpga/rrgraph.hpp"

namespace csfpga {

// per-sink routed path: node ids from the net source to one sink, and the
// switch edges traversed (edge indices into RrGraph::edges)
struct SinkPath {
    int sink_node = -1;
    std::vector<int> nodes;
    std::vector<int> edges;
    int cb_taps = 0;
    int sb_turns = 0;
};

struct NetRoute {
    int net = -1;
    int source_node = -1;
    std::vector<int> tree_nodes;      // all nodes of the route tree
    std::vector<int> tree_edges;      // all switch edges of the route tree
    std::vector<SinkPath> sink_paths; // one per sink, in terminal order
};

// Sinks of a net, identified for timing/simulation purposes.
struct SinkRef {
    enum Kind { LutPin, LatchD, PrimaryOut } kind = LutPin;
    int index = 0; // lut index / latch index / PO ordinal
    int pin = 0;   // fanin position for LutPin
};

struct NetTerminals {
    int net = -1;
    int source_node = -1;
    std::vector<int> sink_nodes;
    std::vector<SinkRef> sink_refs;
};

struct RoutedDesign {
    Netlist netlist;
    PackedNetlist packed;
    Placement placement;
    FabricArch arch;
    std::shared_ptr<const RrGraph> rrg;
    std::vector<NetTerminals> terminals; // per routed net
    std::vector<NetRoute> routes;        // aligned with terminals

    double total_wirelength() const; // wire segments summed over nets
};

// Map every net of a placed design onto RR terminals. Nets whose only
// consumer is a latch fused into the driver's BLE need no routing and are
// omitted.
std::vector<NetTerminals> collect_terminals(const Netlist &n, const PackedNetlist &packed, const Placement &pl,
                                            const RrGraph &rrg);

// Negotiated-congestion (PathFinder-style) maze router: rip-up and re-route
// with growing present-cost and accumulated history cost until every wire
// has at most one net, or the iteration cap (50) trips.
RoutedDesign route(const Netlist &n, const PackedNetlist &packed, const Placement &pl, const FabricArch &arch);

} // namespace csfpga
