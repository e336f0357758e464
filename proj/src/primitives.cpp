#include "csfpga/primitives.hpp"

namespace csfpga {

LutConfig::LutConfig(int k_, uint64_t truth_bits) : k(k_)
{
    if (k < 1 || k > 6)
        throw ValidationError("LutConfig: k must be in [1, 6]");
    cells.resize(size_t(1) << k);
    for (size_t i = 0; i < cells.size(); i++)
        cells[i] = cell_for_bit((truth_bits >> i) & 1);
}

uint64_t LutConfig::decode(const DeviceParams &p) const
{
    uint64_t bits = 0;
    for (size_t i = 0; i < cells.size(); i++) {
        // High-Vth cell is cut off at v_read, the pull-up wins: output '1'.
        if (read_conductance(cells[i], p.v_read, p) == Conduction::Off)
            bits |= uint64_t(1) << i;
    }
    return bits;
}

int lut_eval(const LutConfig &lut, const std::vector<int> &inputs, const DeviceParams &p)
{
    if (int(inputs.size()) != lut.k)
        throw DimensionError("lut_eval: expected " + std::to_string(lut.k) + " inputs, got " +
                             std::to_string(inputs.size()));
    size_t idx = 0;
    for (size_t i = 0; i < inputs.size(); i++)
        if (inputs[i])
            idx |= size_t(1) << i;
    // Selected cell drives the sense amp: conducting (Low-Vth) pulls the
    // output low, cut-off (High-Vth) leaves it high.
    return read_conductance(lut.cells[idx], p.v_read, p) == Conduction::Off ? 1 : 0;
}

int dual_lut_eval(const DualLut &d, const std::vector<int> &inputs, const DeviceParams &p)
{
    return lut_eval(d.plane(d.active), inputs, p);
}

SwitchOutput switch_transmit(const DualSwitch &s, int input_level, const DeviceParams &p)
{
    const DualSwitch::Branch &b = s.plane(s.active);
    // The active branch sees v_read on its gate; the inactive one is held at
    // 0 V and is cut off irrespective of state.
    bool on = b.enable && read_conductance(b.state, p.v_read, p) == Conduction::On;
    SwitchOutput out;
    out.conducting = on;
    out.level = on ? input_level : 0;
    return out;
}

void set_active(DualLut &d, ContextId id)
{
    if (id != 1 && id != 2)
        throw ValidationError("set_active: context id must be 1 or 2");
    d.active = id;
}

void set_active(DualSwitch &s, ContextId id)
{
    if (id != 1 && id != 2)
        throw ValidationError("set_active: context id must be 1 or 2");
    s.active = id;
    s.branch[0].enable = (id == 1);
    s.branch[1].enable = (id == 2);
}

namespace {

FeFetArray run_program(const std::vector<Vth> &current, const std::vector<uint8_t> &target_bits,
                       const DeviceParams &p)
{
    FeFetArray arr(1, int(current.size()));
    for (size_t i = 0; i < current.size(); i++)
        arr.at(0, int(i)) = current[i];
    BitMatrix target(1, int(target_bits.size()));
    for (size_t i = 0; i < target_bits.size(); i++)
        target.at(0, int(i)) = target_bits[i];
    ProgramResult res = program_two_step(arr, target, p);
    if (!res.disturbs.empty())
        throw ValidationError("reprogram: write disturb detected");
    return res.final_state;
}

} // namespace

void reprogram_inactive(DualLut &d, ContextId ctx_id, uint64_t truth_bits, const DeviceParams &p)
{
    if (ctx_id == d.active)
        throw ContextInUseError("reprogram: context " + std::to_string(ctx_id) + " is active");
    LutConfig &plane = d.plane(ctx_id);
    std::vector<uint8_t> target(plane.cells.size());
    for (size_t i = 0; i < target.size(); i++)
        target[i] = (truth_bits >> i) & 1; // bit 1 -> High-Vth
    FeFetArray final_state = run_program(plane.cells, target, p);
    plane.cells.assign(final_state.cells.begin(), final_state.cells.end());
}

void reprogram_inactive(DualSwitch &s, ContextId ctx_id, int connect_bit, const DeviceParams &p)
{
    if (ctx_id == s.active)
        throw ContextInUseError("reprogram: branch " + std::to_string(ctx_id) + " is active");
    DualSwitch::Branch &b = s.plane(ctx_id);
    // connected = conducting = Low-Vth, so the target matrix is inverted
    std::vector<uint8_t> target{uint8_t(connect_bit ? 0 : 1)};
    FeFetArray final_state = run_program({b.state}, target, p);
    b.state = final_state.at(0, 0);
}

} // namespace csfpga
