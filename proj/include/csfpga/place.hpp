#pragma once

#include <cstdint>
#include <vector>

#include "csfpga/pack.hpp"

namespace csfpga {

struct PadLoc {
    int site = -1; // index into FabricArch::io_sites()
    int slot = -1;
};

struct Placement {
    std::vector<std::pair<int, int>> clb_pos; // clb index -> (x, y)
    std::vector<PadLoc> input_pads;           // per primary input
    std::vector<PadLoc> output_pads;          // per primary output
    double hpwl = 0.0;                        // final cost including pads
};

// Half-perimeter wirelength placement: seeded random start, simulated
// annealing with a fixed documented schedule, then greedy descent. IO pads
// are assigned afterwards, each to the free perimeter slot closest to its
// net's logic terminals. Deterministic for a fixed seed.
Placement place(const PackedNetlist &packed, const Netlist &n, const FabricArch &arch, uint64_t seed);

// HPWL of the whole design under a given placement (includes placed pads).
double placement_hpwl(const Placement &pl, const PackedNetlist &packed, const Netlist &n, const FabricArch &arch);

} // namespace csfpga
