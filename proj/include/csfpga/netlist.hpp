#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csfpga/errors.hpp"

namespace csfpga {

// Truth table of a k-input single-output node, k <= 6. Bit i of `bits`
// is the output for the input word i, with input 0 as the LSB.
struct TruthTable {
    int k = 0;
    uint64_t bits = 0;

    int eval(uint64_t input_word) const { return (bits >> input_word) & 1; }
    uint64_t mask() const { return k == 6 ? ~uint64_t(0) : (uint64_t(1) << (1 << k)) - 1; }
};

struct LutNode {
    std::string name; // output net name
    std::vector<int> fanin;
    int out_net = -1;
    TruthTable tt;
};

struct LatchNode {
    std::string name;
    int d_net = -1;
    int q_net = -1;
    int init = 0;
};

// Flat combinational/sequential netlist in the classic logic-cover text
// format (.inputs/.outputs/.names/.latch subset).
struct Netlist {
    std::string model_name;
    std::vector<std::string> net_names;
    std::map<std::string, int> net_ids;
    std::vector<int> inputs;  // net ids
    std::vector<int> outputs; // net ids
    std::vector<LutNode> luts;
    std::vector<LatchNode> latches;

    int net_count() const { return int(net_names.size()); }
    int max_fanin() const;
    // LUT indices in dependency order; throws with the offending cycle if
    // the combinational part is cyclic.
    std::vector<int> topo_order() const;
    void validate() const;
};

Netlist parse_netlist(const std::string &text, const std::string &filename = "<string>");
Netlist parse_netlist_file(const std::string &path);

// Cycle-accurate reference simulation: one vector per clock cycle, outputs
// sampled after combinational settling, latches update at the cycle edge.
std::vector<std::vector<int>> simulate_netlist(const Netlist &n, const std::vector<std::vector<int>> &vectors);

} // namespace csfpga
