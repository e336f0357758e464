#pragma once

#include <memory>
#include <vector>

#include "csfpga/bitstream.hpp"
#include "csfpga/primitives.hpp"

namespace csfpga {

struct FabricBle {
    DualLut lut;                       // planes hold full 2^k-cell tables
    bool registered[2] = {false, false};
    int ff = 0;                        // flip-flop is datapath state, shared
};

// Runtime model of the whole dual-context fabric: every configuration
// point is a FeFET primitive with two planes. Evaluation is structural:
// signals propagate from output pins through conducting switches, BLEs
// evaluate through the active LUT plane. Value semantics; copies are
// independent.
class Fabric {
  public:
    Fabric(const FabricArch &arch, std::shared_ptr<const RrGraph> rrg, DeviceParams dev = {});

    const FabricArch &arch() const { return arch_; }
    const RrGraph &rrg() const { return *rrg_; }
    const DeviceParams &device() const { return dev_; }
    int active_context() const { return active_; }
    const BitstreamLayout &layout() const { return layout_; }

    // direct plane write (power-up state initialization)
    void program_plane(int ctx, const Bitstream &bs);
    // streaming commit of one layout group through the two-step
    // programming protocol; rejects the active context
    void program_group(int ctx, int group, const Bitstream &bs);
    Bitstream extract_plane(int ctx) const;
    void set_context(int ctx);

    struct PadBinding {
        std::vector<int> input_opins;  // per PI, RR node ids
        std::vector<int> output_ipins; // per PO
    };

    // settle combinational logic for one cycle, sample outputs, then clock
    // the flip-flops
    std::vector<int> eval_cycle(const PadBinding &binding, const std::vector<int> &pi_values);
    void reset_state(); // clear flip-flops

    const std::vector<FabricBle> &bles() const { return bles_; }
    const std::vector<DualSwitch> &switches() const { return switches_; }

  private:
    FabricArch arch_;
    std::shared_ptr<const RrGraph> rrg_;
    DeviceParams dev_;
    BitstreamLayout layout_;
    std::vector<FabricBle> bles_;
    std::vector<DualSwitch> switches_;
    int active_ = 1;

    mutable std::vector<char> conducting_; // per edge, rebuilt when dirty
    mutable bool conduct_dirty_ = true;
    void refresh_conducting() const;
    void check_bitstream(const Bitstream &bs) const;
    int ble_output(int ble_index, const std::vector<int> &node_values) const;
};

Fabric::PadBinding make_pad_binding(const RoutedDesign &rd);

// Post-route simulation: program context `ctx` from the routed design's
// bitstream and drive the vectors through the fabric.
std::vector<std::vector<int>> simulate_routed(const RoutedDesign &rd, const std::vector<std::vector<int>> &vectors,
                                              const DeviceParams &dev = {}, int ctx = 1);

} // namespace csfpga
