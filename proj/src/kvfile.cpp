#include "csfpga/kvfile.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace csfpga {

namespace {

const std::map<std::string, std::pair<UnitClass, double>> &unit_table()
{
    static const std::map<std::string, std::pair<UnitClass, double>> table = {
            {"s", {UnitClass::Time, 1.0}},        {"ms", {UnitClass::Time, 1e-3}},
            {"us", {UnitClass::Time, 1e-6}},      {"ns", {UnitClass::Time, 1e-9}},
            {"ps", {UnitClass::Time, 1e-12}},     {"W", {UnitClass::Power, 1.0}},
            {"mW", {UnitClass::Power, 1e-3}},     {"uW", {UnitClass::Power, 1e-6}},
            {"nW", {UnitClass::Power, 1e-9}},     {"V", {UnitClass::Voltage, 1.0}},
            {"mV", {UnitClass::Voltage, 1e-3}},   {"ohm", {UnitClass::Resistance, 1.0}},
            {"kohm", {UnitClass::Resistance, 1e3}}, {"Mohm", {UnitClass::Resistance, 1e6}},
            {"Gohm", {UnitClass::Resistance, 1e9}}, {"lambda2", {UnitClass::Area, 1.0}},
            {"b", {UnitClass::Bits, 1.0}},        {"Kb", {UnitClass::Bits, 1e3}},
            {"Mb", {UnitClass::Bits, 1e6}},       {"Gb", {UnitClass::Bits, 1e9}},
            {"b/s", {UnitClass::Rate, 1.0}},      {"Kb/s", {UnitClass::Rate, 1e3}},
            {"Mb/s", {UnitClass::Rate, 1e6}},     {"Gb/s", {UnitClass::Rate, 1e9}},
    };
    return table;
}

bool parse_double(const std::string &tok, double &out)
{
    const char *begin = tok.c_str();
    char *end = nullptr;
    out = std::strtod(begin, &end);
    return end != begin && *end == '\0';
}

std::vector<std::string> tokenize(const std::string &line)
{
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t)
        toks.push_back(t);
    return toks;
}

} // namespace

std::string KvEntry::as_string() const
{
    if (tokens.empty())
        throw ParseError(file, line, "key '" + key + "' has no value");
    return tokens[0];
}

bool KvEntry::as_bool() const
{
    std::string v = as_string();
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ParseError(file, line, "key '" + key + "': expected boolean, got '" + v + "'");
}

long long KvEntry::as_int() const
{
    double d = as_number();
    long long v = static_cast<long long>(d);
    if (static_cast<double>(v) != d)
        throw ParseError(file, line, "key '" + key + "': expected integer");
    return v;
}

double KvEntry::as_number() const
{
    if (tokens.empty())
        throw ParseError(file, line, "key '" + key + "' has no value");
    double v;
    if (!parse_double(tokens[0], v))
        throw ParseError(file, line, "key '" + key + "': expected number, got '" + tokens[0] + "'");
    if (tokens.size() > 1)
        throw ParseError(file, line, "key '" + key + "': unexpected trailing token '" + tokens[1] + "'");
    return v;
}

double KvEntry::as_quantity(UnitClass unit) const
{
    if (tokens.empty())
        throw ParseError(file, line, "key '" + key + "' has no value");
    double v;
    if (!parse_double(tokens[0], v))
        throw ParseError(file, line, "key '" + key + "': expected number, got '" + tokens[0] + "'");
    if (tokens.size() == 1) {
        // bare numbers are accepted as already-SI
        return v;
    }
    auto it = unit_table().find(tokens[1]);
    if (it == unit_table().end())
        throw ParseError(file, line, "key '" + key + "': unknown unit '" + tokens[1] + "'");
    if (it->second.first != unit)
        throw ParseError(file, line, "key '" + key + "': unit '" + tokens[1] + "' has the wrong dimension");
    return v * it->second.second;
}

const KvEntry *KvSection::find(const std::string &key) const
{
    for (const auto &e : entries)
        if (e.key == key)
            return &e;
    return nullptr;
}

const KvEntry &KvSection::require(const std::string &key) const
{
    const KvEntry *e = find(key);
    if (!e)
        throw ParseError(file, line, "missing required key '" + key + "' in section '" + (name.empty() ? "<root>" : name) + "'");
    return *e;
}

const KvSection *KvSection::find_child(const std::string &cname) const
{
    for (const auto &c : children)
        if (c.name == cname)
            return &c;
    return nullptr;
}

std::string KvSection::get_string(const std::string &key, const std::string &dflt) const
{
    const KvEntry *e = find(key);
    return e ? e->as_string() : dflt;
}

double KvSection::get_number(const std::string &key, double dflt) const
{
    const KvEntry *e = find(key);
    return e ? e->as_number() : dflt;
}

std::optional<double> KvSection::get_quantity(const std::string &key, UnitClass unit) const
{
    const KvEntry *e = find(key);
    if (!e)
        return std::nullopt;
    return e->as_quantity(unit);
}

double KvSection::require_quantity(const std::string &key, UnitClass unit) const
{
    return require(key).as_quantity(unit);
}

KvSection parse_kv(const std::string &text, const std::string &filename)
{
    KvSection root;
    root.file = filename;
    std::vector<KvSection *> stack{&root};

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (toks.size() == 1 && toks[0] == "}") {
            if (stack.size() == 1)
                throw ParseError(filename, lineno, "unmatched '}'");
            stack.pop_back();
            continue;
        }
        if (toks.back() == "{") {
            KvSection child;
            child.name = toks[0];
            child.args.assign(toks.begin() + 1, toks.end() - 1);
            child.line = lineno;
            child.file = filename;
            stack.back()->children.push_back(std::move(child));
            stack.push_back(&stack.back()->children.back());
            continue;
        }
        KvEntry e;
        e.key = toks[0];
        e.tokens.assign(toks.begin() + 1, toks.end());
        e.line = lineno;
        e.file = filename;
        stack.back()->entries.push_back(std::move(e));
    }
    if (stack.size() != 1)
        throw ParseError(filename, lineno, "unterminated section '" + stack.back()->name + "'");
    return root;
}

KvSection parse_kv_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_kv(ss.str(), path);
}

} // namespace csfpga
