#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csfpga/device.hpp"
#include "csfpga/errors.hpp"
#include "csfpga/kvfile.hpp"

namespace csfpga {

enum class PrimitiveKind { LutCell, Lut6, CbSwitch, SbSwitch };
enum class ConfigMode { Single, Dual };

std::string to_string(PrimitiveKind k);
std::string to_string(ConfigMode m);
PrimitiveKind primitive_kind_from_string(const std::string &s);
ConfigMode config_mode_from_string(const std::string &s);

struct CostTriple {
    double area = 0.0;  // lambda^2
    double delay = 0.0; // seconds
    double power = 0.0; // watts
};

// One (kind, mode) row of a tech model. Fields are optional in the file;
// present ones must be positive. pct_of_sram_* carry the published ratios
// and are cross-checked against the SRAM baseline in compare_report.
struct CostEntry {
    std::optional<double> area;
    std::optional<double> delay;
    std::optional<double> power;
    std::optional<double> pct_of_sram_area;
    std::optional<double> pct_of_sram_delay;
    std::optional<double> pct_of_sram_power;
};

struct Resistance {
    double r_on = 0.0;
    double r_off = 0.0;
};

// Per-primitive {area, delay, power} for one memory technology and
// configuration mode. Immutable after load.
struct TechModel {
    std::string name; // SRAM | FEFET_1CFG | FEFET_2CFG | RRAM | STT_MRAM
    ConfigMode default_mode = ConfigMode::Single;
    std::map<std::pair<PrimitiveKind, ConfigMode>, CostEntry> entries;
    std::optional<DeviceParams> device;  // FeFET models
    std::optional<Resistance> resistance; // resistive models
    double leakage_per_switch = 0.0;      // watts; nonzero only for SRAM
    double lut_mux_delay = 0.0;           // seconds; dual-LUT select mux

    const CostEntry *find(PrimitiveKind kind, ConfigMode mode) const;
    void validate() const;
};

TechModel load_tech_model(const std::string &text, const std::string &filename = "<string>");
TechModel load_tech_model_file(const std::string &path);

CostTriple primitive_cost(const TechModel &model, PrimitiveKind kind, ConfigMode mode);

struct DesignStats {
    std::map<PrimitiveKind, long long> counts;
};

struct ReductionRow {
    PrimitiveKind kind;
    // per metric: baseline value, candidate value, candidate as % of
    // baseline, reduction % = 100*(baseline-candidate)/baseline
    struct Metric {
        double baseline = 0.0;
        double candidate = 0.0;
        double ratio_pct = 0.0;
        double reduction_pct = 0.0;
        bool present = false;
    };
    Metric area, delay, power;
};

struct ReductionReport {
    std::string baseline_name;
    std::string candidate_name;
    std::vector<ReductionRow> rows;
    // count-weighted design-level totals (only over metrics present for
    // every counted kind)
    ReductionRow::Metric total_area, total_delay, total_power;
};

// Per-primitive and count-weighted aggregate reductions of candidate vs.
// baseline, each model read at its native configuration mode.
ReductionReport compare_report(const TechModel &baseline, const TechModel &candidate, const DesignStats &stats);

} // namespace csfpga
