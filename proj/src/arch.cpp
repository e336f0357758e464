#include "csfpga/arch.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace csfpga {

int FabricArch::fc_tracks() const
{
    int n = int(std::ceil(cb_fc * channel_width));
    if (n < 1)
        n = 1;
    if (n > channel_width)
        n = channel_width;
    return n;
}

std::vector<FabricArch::IoSite> FabricArch::io_sites() const
{
    std::vector<IoSite> sites;
    for (int x = 1; x <= width; x++)
        sites.push_back({x, 0});
    for (int x = 1; x <= width; x++)
        sites.push_back({x, height + 1});
    for (int y = 1; y <= height; y++)
        sites.push_back({0, y});
    for (int y = 1; y <= height; y++)
        sites.push_back({width + 1, y});
    return sites;
}

void FabricArch::validate() const
{
    if (width < 1 || height < 1)
        throw ValidationError("arch: grid dimensions must be at least 1x1");
    if (cluster_size < 1)
        throw ValidationError("arch: cluster_size must be at least 1");
    if (lut_inputs < 1 || lut_inputs > 6)
        throw ValidationError("arch: lut_inputs must be in [1, 6]");
    if (channel_width < 1)
        throw ValidationError("arch: channel_width must be at least 1");
    if (!(cb_fc > 0.0 && cb_fc <= 1.0))
        throw ValidationError("arch: cb_fc must be in (0, 1]");
    if (io_capacity < 1)
        throw ValidationError("arch: io_capacity must be at least 1");
}

std::string FabricArch::canonical_string() const
{
    std::ostringstream os;
    os << name << ";w=" << width << ";h=" << height << ";n=" << cluster_size << ";k=" << lut_inputs
       << ";wch=" << channel_width << ";sb=" << to_string(sb_pattern) << ";fc=" << cb_fc << ";io=" << io_capacity;
    return os.str();
}

uint32_t fnv1a32(const std::string &s)
{
    uint32_t h = 2166136261u;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

uint32_t FabricArch::hash() const { return fnv1a32(canonical_string()); }

SbPattern sb_pattern_from_string(const std::string &s)
{
    if (s == "disjoint")
        return SbPattern::Disjoint;
    if (s == "wilton")
        return SbPattern::Wilton;
    throw ValidationError("unknown sb_pattern '" + s + "' (expected disjoint or wilton)");
}

std::string to_string(SbPattern p) { return p == SbPattern::Disjoint ? "disjoint" : "wilton"; }

FabricArch load_arch(const std::string &text, const std::string &filename)
{
    KvSection root = parse_kv(text, filename);
    FabricArch a;
    a.name = root.get_string("name", "arch");
    a.width = int(root.get_number("grid_width", a.width));
    a.height = int(root.get_number("grid_height", a.height));
    a.cluster_size = int(root.get_number("cluster_size", a.cluster_size));
    a.lut_inputs = int(root.get_number("lut_inputs", a.lut_inputs));
    a.channel_width = int(root.get_number("channel_width", a.channel_width));
    a.sb_pattern = sb_pattern_from_string(root.get_string("sb_pattern", "wilton"));
    a.cb_fc = root.get_number("cb_fc", a.cb_fc);
    a.io_capacity = int(root.get_number("io_capacity", a.io_capacity));
    a.validate();
    return a;
}

FabricArch load_arch_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_arch(ss.str(), path);
}

} // namespace csfpga
