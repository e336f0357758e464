#include "csfpga/techlib.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace csfpga {

std::string to_string(PrimitiveKind k)
{
    switch (k) {
    case PrimitiveKind::LutCell:
        return "LUT_CELL";
    case PrimitiveKind::Lut6:
        return "LUT6";
    case PrimitiveKind::CbSwitch:
        return "CB_SWITCH";
    case PrimitiveKind::SbSwitch:
        return "SB_SWITCH";
    }
    return "?";
}

std::string to_string(ConfigMode m) { return m == ConfigMode::Single ? "SINGLE" : "DUAL"; }

PrimitiveKind primitive_kind_from_string(const std::string &s)
{
    if (s == "LUT_CELL")
        return PrimitiveKind::LutCell;
    if (s == "LUT6")
        return PrimitiveKind::Lut6;
    if (s == "CB_SWITCH")
        return PrimitiveKind::CbSwitch;
    if (s == "SB_SWITCH")
        return PrimitiveKind::SbSwitch;
    throw ValidationError("unknown primitive kind '" + s + "'");
}

ConfigMode config_mode_from_string(const std::string &s)
{
    if (s == "SINGLE")
        return ConfigMode::Single;
    if (s == "DUAL")
        return ConfigMode::Dual;
    throw ValidationError("unknown configuration mode '" + s + "'");
}

const CostEntry *TechModel::find(PrimitiveKind kind, ConfigMode mode) const
{
    auto it = entries.find({kind, mode});
    return it == entries.end() ? nullptr : &it->second;
}

void TechModel::validate() const
{
    if (name.empty())
        throw ValidationError("tech model: missing name");
    for (const auto &[key, e] : entries) {
        std::string where = name + " " + to_string(key.first) + " " + to_string(key.second);
        if (!e.area && !e.delay && !e.power)
            throw ValidationError(where + ": entry has no fields");
        if (e.area && !(*e.area > 0))
            throw ValidationError(where + ": field 'area' must be positive");
        if (e.delay && !(*e.delay > 0))
            throw ValidationError(where + ": field 'delay' must be positive");
        if (e.power && !(*e.power > 0))
            throw ValidationError(where + ": field 'power' must be positive");
    }
    if (name == "FEFET_2CFG") {
        for (PrimitiveKind k : {PrimitiveKind::LutCell, PrimitiveKind::Lut6, PrimitiveKind::CbSwitch,
                                PrimitiveKind::SbSwitch})
            if (!find(k, ConfigMode::Dual))
                throw ValidationError("FEFET_2CFG: missing DUAL entry for " + to_string(k));
    }
    if (device)
        device->validate();
    if (resistance && !(resistance->r_on > 0 && resistance->r_off > 0))
        throw ValidationError(name + ": resistance values must be positive");
    if (leakage_per_switch < 0)
        throw ValidationError(name + ": field 'leakage_per_switch' must be non-negative");
}

TechModel load_tech_model(const std::string &text, const std::string &filename)
{
    KvSection root = parse_kv(text, filename);
    TechModel m;
    m.name = root.require("name").as_string();
    m.default_mode = config_mode_from_string(root.get_string("default_mode", "SINGLE"));
    if (auto v = root.get_quantity("leakage_per_switch", UnitClass::Power))
        m.leakage_per_switch = *v;
    if (auto v = root.get_quantity("lut_mux_delay", UnitClass::Time))
        m.lut_mux_delay = *v;

    for (const auto &sec : root.children) {
        if (sec.name == "primitive") {
            if (sec.args.size() != 2)
                throw ParseError(sec.file, sec.line, "primitive section needs '<kind> <mode>'");
            PrimitiveKind kind = primitive_kind_from_string(sec.args[0]);
            ConfigMode mode = config_mode_from_string(sec.args[1]);
            CostEntry e;
            e.area = sec.get_quantity("area", UnitClass::Area);
            e.delay = sec.get_quantity("delay", UnitClass::Time);
            e.power = sec.get_quantity("power", UnitClass::Power);
            if (const KvEntry *p = sec.find("pct_of_sram_area"))
                e.pct_of_sram_area = p->as_number();
            if (const KvEntry *p = sec.find("pct_of_sram_delay"))
                e.pct_of_sram_delay = p->as_number();
            if (const KvEntry *p = sec.find("pct_of_sram_power"))
                e.pct_of_sram_power = p->as_number();
            m.entries[{kind, mode}] = e;
        } else if (sec.name == "device") {
            m.device = DeviceParams::from_kv(sec);
        } else if (sec.name == "resistance") {
            Resistance r;
            r.r_on = sec.require_quantity("r_on", UnitClass::Resistance);
            r.r_off = sec.require_quantity("r_off", UnitClass::Resistance);
            m.resistance = r;
        } else {
            throw ParseError(sec.file, sec.line, "unknown section '" + sec.name + "'");
        }
    }

    // Fill the dual-LUT read delay from the single entry plus the select
    // mux when the file omits it.
    auto dual = m.entries.find({PrimitiveKind::Lut6, ConfigMode::Dual});
    auto single = m.entries.find({PrimitiveKind::Lut6, ConfigMode::Single});
    if (dual != m.entries.end() && !dual->second.delay && single != m.entries.end() && single->second.delay)
        dual->second.delay = *single->second.delay + m.lut_mux_delay;

    m.validate();
    return m;
}

TechModel load_tech_model_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_tech_model(ss.str(), path);
}

CostTriple primitive_cost(const TechModel &model, PrimitiveKind kind, ConfigMode mode)
{
    const CostEntry *e = model.find(kind, mode);
    if (!e)
        throw LookupError(model.name + ": no entry for (" + to_string(kind) + ", " + to_string(mode) + ")");
    CostTriple t;
    t.area = e->area.value_or(0.0);
    t.delay = e->delay.value_or(0.0);
    t.power = e->power.value_or(0.0);
    return t;
}

namespace {

ReductionRow::Metric make_metric(double base, double cand)
{
    ReductionRow::Metric m;
    m.baseline = base;
    m.candidate = cand;
    m.ratio_pct = 100.0 * cand / base;
    m.reduction_pct = 100.0 * (base - cand) / base;
    m.present = true;
    return m;
}

void check_annotation(const std::string &who, const char *metric, std::optional<double> annotated, double actual_pct)
{
    if (annotated && std::fabs(*annotated - actual_pct) > 0.1)
        throw ValidationError(who + ": annotated " + metric + " ratio " + std::to_string(*annotated) +
                              "% disagrees with computed " + std::to_string(actual_pct) + "%");
}

} // namespace

ReductionReport compare_report(const TechModel &baseline, const TechModel &candidate, const DesignStats &stats)
{
    ReductionReport rep;
    rep.baseline_name = baseline.name;
    rep.candidate_name = candidate.name;

    double tb_area = 0, tc_area = 0, tb_delay = 0, tc_delay = 0, tb_power = 0, tc_power = 0;
    bool all_area = true, all_delay = true, all_power = true;

    for (const auto &[kind, count] : stats.counts) {
        const CostEntry *b = baseline.find(kind, baseline.default_mode);
        const CostEntry *c = candidate.find(kind, candidate.default_mode);
        if (!b)
            throw LookupError(baseline.name + ": no entry for " + to_string(kind) + " at its default mode");
        if (!c)
            throw LookupError(candidate.name + ": no entry for " + to_string(kind) + " at its default mode");

        ReductionRow row;
        row.kind = kind;
        std::string who = candidate.name + " " + to_string(kind);
        if (b->area && c->area) {
            row.area = make_metric(*b->area, *c->area);
            if (baseline.name == "SRAM")
                check_annotation(who, "area", c->pct_of_sram_area, row.area.ratio_pct);
            tb_area += count * *b->area;
            tc_area += count * *c->area;
        } else {
            all_area = false;
        }
        if (b->delay && c->delay) {
            row.delay = make_metric(*b->delay, *c->delay);
            if (baseline.name == "SRAM")
                check_annotation(who, "delay", c->pct_of_sram_delay, row.delay.ratio_pct);
            tb_delay += count * *b->delay;
            tc_delay += count * *c->delay;
        } else {
            all_delay = false;
        }
        if (b->power && c->power) {
            row.power = make_metric(*b->power, *c->power);
            if (baseline.name == "SRAM")
                check_annotation(who, "power", c->pct_of_sram_power, row.power.ratio_pct);
            tb_power += count * *b->power;
            tc_power += count * *c->power;
        } else {
            all_power = false;
        }
        rep.rows.push_back(row);
    }

    if (all_area && tb_area > 0)
        rep.total_area = make_metric(tb_area, tc_area);
    if (all_delay && tb_delay > 0)
        rep.total_delay = make_metric(tb_delay, tc_delay);
    if (all_power && tb_power > 0)
        rep.total_power = make_metric(tb_power, tc_power);
    return rep;
}

} // namespace csfpga
