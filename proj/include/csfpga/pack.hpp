#pragma once

#include <vector>

#include "csfpga/arch.hpp"
#include "csfpga/netlist.hpp"

namespace csfpga {

// One basic logic element: a LUT, a latch, or a LUT feeding its latch
// (fused when the LUT's only fanout is that latch). A lone latch uses the
// BLE's LUT as a route-through on input pin 0.
struct Ble {
    int lut = -1;   // index into Netlist::luts
    int latch = -1; // index into Netlist::latches

    bool registered() const { return latch >= 0; }
};

struct PackedClb {
    std::vector<Ble> bles;
};

struct PackedNetlist {
    std::vector<PackedClb> clbs;
    std::vector<std::pair<int, int>> lut_slot;   // lut index -> (clb, ble)
    std::vector<std::pair<int, int>> latch_slot; // latch index -> (clb, ble)

    int ble_count() const;
};

// Connectivity-driven greedy grouping of BLEs into CLBs of N slots.
// Deterministic; falls back to plain bin filling when affinity grouping
// alone would overflow the grid.
PackedNetlist pack(const Netlist &n, const FabricArch &arch);

} // namespace csfpga
