#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "csfpga/route.hpp"

namespace csfpga {

// One context's configuration bits in the documented scan order:
//   section 1: BLEs, CLB sites row-major (y=1..H outer, x=1..W inner),
//              BLE 0..N-1 within a site; per BLE 2^k LUT bits (input word
//              ascending) then one registered flag
//   section 2: connection-block switches in RR enumeration order
//   section 3: switch-box switches in RR enumeration order
// Length is a pure function of the architecture.
struct Bitstream {
    uint32_t arch_hash = 0;
    uint32_t context_id = 1;
    std::vector<uint8_t> bits; // one 0/1 per configuration point

    size_t bit_length() const { return bits.size(); }
};

struct BitstreamLayout {
    int n_bles = 0;   // fabric sites * N
    int ble_bits = 0; // 2^k + 1
    int n_cb = 0;
    int n_sb = 0;

    size_t clb_section_bits() const { return size_t(n_bles) * ble_bits; }
    size_t total_bits() const { return clb_section_bits() + n_cb + n_sb; }
    size_t ble_offset(int ble_index) const { return size_t(ble_index) * ble_bits; }
    size_t switch_offset(int switch_id) const { return clb_section_bits() + switch_id; }

    // atomic commit groups for streaming loads: one per BLE, then one per
    // switch; a group's bits commit together when the load passes its end
    int group_count() const { return n_bles + n_cb + n_sb; }
    std::pair<size_t, size_t> group_range(int g) const;
};

BitstreamLayout bitstream_layout(const FabricArch &arch, const RrGraph &rrg);

Bitstream generate_bitstream(const RoutedDesign &rd, int ctx);

// 16-byte header {magic 'CSFB', arch hash, context id, bit length}, then
// bits packed LSB-first.
void write_bitstream(std::ostream &os, const Bitstream &bs);
Bitstream read_bitstream(std::istream &is);

} // namespace csfpga
