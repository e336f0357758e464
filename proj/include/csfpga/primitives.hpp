#pragma once

#include <cstdint>
#include <vector>

#include "csfpga/device.hpp"

namespace csfpga {

using ContextId = int; // 1 or 2

// One k-input LUT plane. Logic bit '1' is stored as a High-Vth cell and
// reads back as a high output; '0' as Low-Vth reading low. The stored state
// is the source of truth, logic bits are decoded through the read path.
struct LutConfig {
    int k = 0;
    std::vector<Vth> cells; // 2^k cells, index = input word

    LutConfig() = default;
    LutConfig(int k_, uint64_t truth_bits);

    uint64_t decode(const DeviceParams &p) const; // read every cell at v_read
    static Vth cell_for_bit(int bit) { return bit ? Vth::High : Vth::Low; }
};

// Two LUT planes behind a select mux; exactly one is active.
struct DualLut {
    LutConfig ctx[2];
    ContextId active = 1;

    LutConfig &plane(ContextId id) { return ctx[id - 1]; }
    const LutConfig &plane(ContextId id) const { return ctx[id - 1]; }
};

// One routing switch with two parallel FeFET branches. Each branch has a
// serial enable transistor; only the active branch's is on, so a branch
// being reprogrammed can never pull on the output.
struct DualSwitch {
    struct Branch {
        Vth state = Vth::High; // High-Vth = open (not conducting)
        bool enable = false;
    };
    Branch branch[2];
    ContextId active = 1;

    DualSwitch() { branch[0].enable = true; }

    Branch &plane(ContextId id) { return branch[id - 1]; }
    const Branch &plane(ContextId id) const { return branch[id - 1]; }
};

struct SwitchOutput {
    bool conducting = false;
    int level = 0; // blocked output is pulled low
};

int lut_eval(const LutConfig &lut, const std::vector<int> &inputs, const DeviceParams &p);
int dual_lut_eval(const DualLut &d, const std::vector<int> &inputs, const DeviceParams &p);

SwitchOutput switch_transmit(const DualSwitch &s, int input_level, const DeviceParams &p);

// Point the select/enable lines at a context. Evaluation before and after is
// defined; the transition itself is instantaneous at this level.
void set_active(DualLut &d, ContextId id);
void set_active(DualSwitch &s, ContextId id);

// Rewrite the inactive plane through the two-step programming protocol.
// LUT bits use the storage convention (bit 1 -> High-Vth); a switch
// configuration bit 1 means "connected" and maps to Low-Vth.
void reprogram_inactive(DualLut &d, ContextId ctx_id, uint64_t truth_bits, const DeviceParams &p);
void reprogram_inactive(DualSwitch &s, ContextId ctx_id, int connect_bit, const DeviceParams &p);

} // namespace csfpga
