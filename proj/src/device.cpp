#include "csfpga/device.hpp"

#include <cmath>

namespace csfpga {

void DeviceParams::validate() const
{
    if (!(memory_window() > 0))
        throw ValidationError("device: memory window must be positive (v_th_high > v_th_low)");
    if (!(r_off / r_on >= 100.0))
        throw ValidationError("device: r_off/r_on must be at least 100");
    if (!(v_th_low < v_read && v_read < v_th_high))
        throw ValidationError("device: v_read must lie inside the memory window");
    if (!(v_write > 0))
        throw ValidationError("device: v_write must be positive");
    if (!(t0 > 0 && v_s > 0))
        throw ValidationError("device: nucleation parameters t0 and v_s must be positive");
}

DeviceParams DeviceParams::from_kv(const KvSection &sec)
{
    DeviceParams p;
    if (auto v = sec.get_quantity("v_th_low", UnitClass::Voltage))
        p.v_th_low = *v;
    if (auto v = sec.get_quantity("v_th_high", UnitClass::Voltage))
        p.v_th_high = *v;
    if (auto v = sec.get_quantity("v_read", UnitClass::Voltage))
        p.v_read = *v;
    if (auto v = sec.get_quantity("v_write", UnitClass::Voltage))
        p.v_write = *v;
    if (auto v = sec.get_quantity("r_on", UnitClass::Resistance))
        p.r_on = *v;
    if (auto v = sec.get_quantity("r_off", UnitClass::Resistance))
        p.r_off = *v;
    if (auto v = sec.get_quantity("t0", UnitClass::Time))
        p.t0 = *v;
    if (auto v = sec.get_quantity("v0", UnitClass::Voltage))
        p.v0 = *v;
    if (auto v = sec.get_quantity("v_s", UnitClass::Voltage))
        p.v_s = *v;
    p.validate();
    return p;
}

double switching_time(const DeviceParams &p, double amplitude)
{
    if (!(amplitude > 0))
        throw DomainError("switching_time: pulse amplitude must be positive");
    return p.t0 * std::exp(-(amplitude - p.v0) / p.v_s);
}

Vth apply_pulse(Vth state, const WritePulse &pulse, const DeviceParams &p)
{
    double mag = std::fabs(pulse.amplitude);
    if (mag == 0.0 || pulse.width <= 0.0)
        return state;
    if (pulse.width < switching_time(p, mag))
        return state; // sub-threshold exposure, no polarization reversal
    return pulse.amplitude > 0 ? Vth::Low : Vth::High;
}

Conduction read_conductance(Vth state, double v_gate, const DeviceParams &p)
{
    double vth = (state == Vth::Low) ? p.v_th_low : p.v_th_high;
    return v_gate > vth ? Conduction::On : Conduction::Off;
}

namespace {

void apply_step(FeFetArray &arr, const PulseStep &step, const DeviceParams &p)
{
    for (int r = 0; r < arr.rows; r++) {
        for (int c = 0; c < arr.cols; c++) {
            WritePulse pulse{step.cell_bias(r, c), step.width};
            arr.at(r, c) = apply_pulse(arr.at(r, c), pulse, p);
        }
    }
}

void scan_disturbs(const FeFetArray &arr, const PulseStep &step, const DeviceParams &p,
                   std::vector<DisturbRecord> &out)
{
    for (int r = 0; r < arr.rows; r++) {
        for (int c = 0; c < arr.cols; c++) {
            if (step.intended[r * arr.cols + c])
                continue;
            double mag = std::fabs(step.cell_bias(r, c));
            if (mag == 0.0)
                continue;
            double tsw = switching_time(p, mag);
            if (step.width >= tsw)
                out.push_back({r, c, mag, step.width, tsw, step.label});
        }
    }
}

} // namespace

ProgramResult program_two_step(const FeFetArray &array, const BitMatrix &target, const DeviceParams &p,
                               double pulse_width)
{
    if (array.rows != target.rows || array.cols != target.cols)
        throw DimensionError("program_two_step: target is " + std::to_string(target.rows) + "x" +
                             std::to_string(target.cols) + " but array is " + std::to_string(array.rows) + "x" +
                             std::to_string(array.cols));

    ProgramResult res;
    res.final_state = array;
    double vw = p.v_write;

    // Step 1: bulk erase. +V_W on every word line, all bodies grounded.
    PulseStep erase;
    erase.label = "erase";
    erase.wl.assign(array.rows, vw);
    erase.body.assign(array.cols, 0.0);
    erase.width = pulse_width;
    erase.intended.assign(array.rows * array.cols, 1);
    res.plan.push_back(erase);

    // Step 2: one selective write per row that has any High-Vth target.
    // Selected row's WL grounded; targeted columns see body +V_W (cell bias
    // -V_W), others +V_W/2. Unselected rows sit at +V_W/2 so no cell in the
    // block sees more than half the write voltage.
    for (int r = 0; r < array.rows; r++) {
        bool any = false;
        for (int c = 0; c < array.cols; c++)
            any = any || target.at(r, c);
        if (!any)
            continue;
        PulseStep w;
        w.label = "write row " + std::to_string(r);
        w.wl.assign(array.rows, vw / 2);
        w.wl[r] = 0.0;
        w.body.assign(array.cols, vw / 2);
        w.intended.assign(array.rows * array.cols, 0);
        for (int c = 0; c < array.cols; c++) {
            if (target.at(r, c)) {
                w.body[c] = vw;
                w.intended[r * array.cols + c] = 1;
            }
        }
        w.width = pulse_width;
        res.plan.push_back(w);
    }

    for (const auto &step : res.plan) {
        scan_disturbs(res.final_state, step, p, res.disturbs);
        apply_step(res.final_state, step, p);
    }
    return res;
}

} // namespace csfpga
