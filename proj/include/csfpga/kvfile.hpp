#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csfpga/errors.hpp"

namespace csfpga {

// Line-oriented hierarchical key-value format shared by tech-model, arch and
// scenario files:
//
//   # comment
//   key value [unit]
//   section [args...] {
//     key value [unit]
//   }
//
// Values keep their raw token(s); typed accessors apply unit suffixes.
// Recognized suffixes (decimal multipliers):
//   time        s ms us ns ps
//   power       W mW uW nW
//   voltage     V mV
//   resistance  ohm kohm Mohm Gohm
//   area        lambda2
//   bits        b Kb Mb Gb
//   rate        b/s Kb/s Mb/s Gb/s

enum class UnitClass { None, Time, Power, Voltage, Resistance, Area, Bits, Rate };

struct KvEntry {
    std::string key;
    std::vector<std::string> tokens; // value tokens, unit last if present
    int line = 0;
    std::string file;

    std::string as_string() const;
    bool as_bool() const;
    long long as_int() const;
    double as_number() const;                // unit-less
    double as_quantity(UnitClass unit) const; // scaled to SI
};

struct KvSection {
    std::string name;              // section keyword ("" for root)
    std::vector<std::string> args; // header tokens after the keyword
    std::vector<KvEntry> entries;
    std::vector<KvSection> children;
    int line = 0;
    std::string file;

    const KvEntry *find(const std::string &key) const;
    const KvEntry &require(const std::string &key) const;
    const KvSection *find_child(const std::string &name) const;

    std::string get_string(const std::string &key, const std::string &dflt) const;
    double get_number(const std::string &key, double dflt) const;
    std::optional<double> get_quantity(const std::string &key, UnitClass unit) const;
    double require_quantity(const std::string &key, UnitClass unit) const;
};

KvSection parse_kv(const std::string &text, const std::string &filename);
KvSection parse_kv_file(const std::string &path);

} // namespace csfpga
