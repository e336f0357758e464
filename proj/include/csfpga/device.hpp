#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csfpga/errors.hpp"
#include "csfpga/kvfile.hpp"

namespace csfpga {

// Binary threshold state of a FeFET. Ferroelectric polarization toward the
// channel gives the low-Vth state, away from it the high-Vth state.
enum class Vth : uint8_t { Low, High };

enum class Conduction : uint8_t { Off, On };

// Behavioral FeFET parameters. Switching follows the nucleation-limited law
//   t_sw(a) = t0 * exp(-(a - v0) / v_s)
// Defaults are calibrated so t_sw(4 V) = 10 ns while a half-select exposure
// at 2 V stays above 1 ms, which keeps 1 us inhibition pulses harmless.
struct DeviceParams {
    double v_th_low = 0.4;  // volts
    double v_th_high = 1.6; // volts; memory window = 1.2 V
    double v_read = 1.0;    // volts, midway in the window
    double v_write = 4.0;   // volts (V_W)
    double r_on = 10e3;     // ohms
    double r_off = 10e9;    // ohms
    double t0 = 10e-9;      // seconds, switching time at v0
    double v0 = 4.0;        // volts, reference amplitude
    double v_s = 0.15;      // volts, slope of the exponential

    double memory_window() const { return v_th_high - v_th_low; }
    void validate() const;

    static DeviceParams from_kv(const KvSection &sec);
};

struct WritePulse {
    double amplitude = 0.0; // volts, gate-to-body, signed
    double width = 0.0;     // seconds, > 0
};

// Nucleation-limited switching time at a positive pulse amplitude.
double switching_time(const DeviceParams &p, double amplitude);

// Pulse-driven state update. A positive pulse held for at least
// t_sw(|a|) programs Low-Vth, a negative one High-Vth; shorter or weaker
// pulses leave the state untouched.
Vth apply_pulse(Vth state, const WritePulse &pulse, const DeviceParams &p);

// Read-path conductance at a given gate bias. With the gate grounded the
// device is cut off in both states, which is what deactivates a routing
// branch.
Conduction read_conductance(Vth state, double v_gate, const DeviceParams &p);

// WL/body-addressed FeFET array: one shared word line per row
// (configuration block), one shared body contact per column. Bit/source
// lines carry only functional signals, never write voltages.
struct FeFetArray {
    int rows = 0;
    int cols = 0;
    std::vector<Vth> cells; // row-major

    FeFetArray() = default;
    FeFetArray(int r, int c, Vth init = Vth::High) : rows(r), cols(c), cells(r * c, init) {}

    Vth &at(int r, int c) { return cells[r * cols + c]; }
    Vth at(int r, int c) const { return cells[r * cols + c]; }
};

struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> bits; // row-major, 1 = High-Vth target

    BitMatrix() = default;
    BitMatrix(int r, int c) : rows(r), cols(c), bits(r * c, 0) {}

    uint8_t &at(int r, int c) { return bits[r * cols + c]; }
    uint8_t at(int r, int c) const { return bits[r * cols + c]; }
};

// One step of a programming plan: per-row WL and per-column body voltages
// held for `width` seconds. Every cell sees gate-to-body wl[row] - body[col].
// `intended` marks the cells this step is supposed to switch.
struct PulseStep {
    std::string label;
    std::vector<double> wl;   // volts, per row
    std::vector<double> body; // volts, per column
    double width = 1e-6;
    std::vector<uint8_t> intended; // row-major

    double cell_bias(int r, int c) const { return wl[r] - body[c]; }
};

struct DisturbRecord {
    int row = 0, col = 0;
    double amplitude = 0.0; // |gate-to-body| seen by the cell
    double exposure = 0.0;  // pulse width it was exposed for
    double t_sw = 0.0;      // switching time at that amplitude
    std::string step;
};

struct ProgramResult {
    std::vector<PulseStep> plan;
    FeFetArray final_state;
    std::vector<DisturbRecord> disturbs;
};

// Two-step programming of one target pattern with V_W/2 inhibition:
// step 1 erases every cell to Low-Vth with +V_W on all word lines; step 2
// writes High-Vth row by row with the block's WL grounded, +V_W on targeted
// body columns and +V_W/2 elsewhere (unselected rows sit at +V_W/2).
// The disturb report lists every cell a step switched without meaning to.
ProgramResult program_two_step(const FeFetArray &array, const BitMatrix &target, const DeviceParams &p,
                               double pulse_width = 1e-6);

} // namespace csfpga
