#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csfpga/errors.hpp"
#include "csfpga/kvfile.hpp"

namespace csfpga {

enum class SbPattern { Disjoint, Wilton };

// Island-style fabric parameters. CLBs sit on a width x height grid of
// logic sites; IO pads ring the perimeter; routing channels run between
// rows/columns with `channel_width` tracks each.
struct FabricArch {
    std::string name = "arch";
    int width = 4;
    int height = 4;
    int cluster_size = 8; // N BLEs per CLB
    int lut_inputs = 6;   // k
    int channel_width = 8;
    SbPattern sb_pattern = SbPattern::Wilton;
    double cb_fc = 1.0; // fraction of tracks each pin may tap per channel
    int io_capacity = 4;

    int clb_sites() const { return width * height; }
    int lut_bits_per_ble() const { return 1 << lut_inputs; }
    int ble_config_bits() const { return lut_bits_per_ble() + 1; } // + registered flag
    int fc_tracks() const;

    // IO sites in documented perimeter order: bottom x=1..W, top x=1..W,
    // left y=1..H, right y=1..H.
    struct IoSite {
        int x, y;
    };
    std::vector<IoSite> io_sites() const;

    void validate() const;
    std::string canonical_string() const;
    uint32_t hash() const;
};

SbPattern sb_pattern_from_string(const std::string &s);
std::string to_string(SbPattern p);

FabricArch load_arch(const std::string &text, const std::string &filename = "<string>");
FabricArch load_arch_file(const std::string &path);

uint32_t fnv1a32(const std::string &s);

} // namespace csfpga
