#pragma once

#include <string>
#include <vector>

#include "csfpga/arch.hpp"

namespace csfpga {

// Routing-resource graph of an island-style fabric.
//
// Nodes: CLB/IO output pins (OPIN), input pins (IPIN), and channel wire
// segments (WIRE, unit length). Edges are programmable switches: OPIN->WIRE
// and WIRE->IPIN taps are connection-block switches, WIRE->WIRE hops through
// a switch box are switch-block switches. Every switch carries a stable
// config-bit index; switch-box connections are bidirectional and share one
// bit between the two directed edges.
//
// Enumeration order (also the bitstream order) is documented in
// docs: CLBs row-major (y=1..H outer, x=1..W inner), IO sites bottom, top,
// left, right; channels CHANX then CHANY.

enum class RrType : uint8_t { Opin, Ipin, Wire };

enum class ChanAxis : uint8_t { X, Y };

struct RrNode {
    RrType type = RrType::Wire;
    // pins: owner block position + pin index; wires: channel coordinates
    int x = 0, y = 0;
    int pin = 0;           // pin index within block (pins only)
    bool is_io = false;    // pin belongs to an IO pad
    int io_slot = 0;       // pad slot within the IO site
    ChanAxis axis = ChanAxis::X;
    int track = 0;

    std::string describe() const;
};

enum class SwitchKind : uint8_t { Cb, Sb };

struct RrEdge {
    int from = -1;
    int to = -1;
    SwitchKind kind = SwitchKind::Cb;
    int switch_id = -1; // global switch index: CB switches first, then SB
};

struct RrGraph {
    FabricArch arch;
    std::vector<RrNode> nodes;
    std::vector<RrEdge> edges;
    std::vector<std::vector<int>> out_edges; // node -> edge indices
    int n_cb_switches = 0;
    int n_sb_switches = 0;
    int n_wires = 0;

    int total_switches() const { return n_cb_switches + n_sb_switches; }

    // node lookups (computed from the fixed enumeration)
    int clb_opin(int x, int y, int ble) const;
    int clb_ipin(int x, int y, int pin) const;
    int io_opin(int site_index, int slot) const;
    int io_ipin(int site_index, int slot) const;
    int wire_node(ChanAxis axis, int x, int y, int track) const;

    bool is_wire(int node) const { return nodes[node].type == RrType::Wire; }
};

RrGraph build_rr_graph(const FabricArch &arch);

} // namespace csfpga
