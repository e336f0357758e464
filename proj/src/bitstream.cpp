#include "csfpga/bitstream.hpp"

#include <istream>
#include <ostream>

namespace csfpga {

std::pair<size_t, size_t> BitstreamLayout::group_range(int g) const
{
    if (g < n_bles)
        return {ble_offset(g), ble_offset(g) + ble_bits};
    size_t off = clb_section_bits() + (g - n_bles);
    return {off, off + 1};
}

BitstreamLayout bitstream_layout(const FabricArch &arch, const RrGraph &rrg)
{
    BitstreamLayout l;
    l.n_bles = arch.clb_sites() * arch.cluster_size;
    l.ble_bits = arch.ble_config_bits();
    l.n_cb = rrg.n_cb_switches;
    l.n_sb = rrg.n_sb_switches;
    return l;
}

// expand an arity-a truth table to the fabric's k inputs; upper input
// lines are ignored by the function
static uint64_t expand_truth(const TruthTable &tt, int k)
{
    uint64_t out = 0;
    uint64_t amask = (tt.k >= 6) ? ~uint64_t(0) : ((uint64_t(1) << tt.k) - 1);
    for (uint64_t idx = 0; idx < (uint64_t(1) << k); idx++)
        if (tt.eval(idx & amask))
            out |= uint64_t(1) << idx;
    return out;
}

Bitstream generate_bitstream(const RoutedDesign &rd, int ctx)
{
    const FabricArch &arch = rd.arch;
    BitstreamLayout layout = bitstream_layout(arch, *rd.rrg);
    Bitstream bs;
    bs.arch_hash = arch.hash();
    bs.context_id = uint32_t(ctx);
    bs.bits.assign(layout.total_bits(), 0);

    for (size_t ci = 0; ci < rd.packed.clbs.size(); ci++) {
        auto [x, y] = rd.placement.clb_pos[ci];
        int site = (y - 1) * arch.width + (x - 1);
        for (size_t bi = 0; bi < rd.packed.clbs[ci].bles.size(); bi++) {
            const Ble &b = rd.packed.clbs[ci].bles[bi];
            size_t off = layout.ble_offset(site * arch.cluster_size + int(bi));
            TruthTable tt;
            if (b.lut >= 0) {
                tt = rd.netlist.luts[b.lut].tt;
            } else {
                tt.k = 1; // lone latch: route-through on input pin 0
                tt.bits = 0b10;
            }
            uint64_t bits = expand_truth(tt, arch.lut_inputs);
            for (int j = 0; j < arch.lut_bits_per_ble(); j++)
                bs.bits[off + j] = (bits >> j) & 1;
            bs.bits[off + arch.lut_bits_per_ble()] = b.registered() ? 1 : 0;
        }
    }

    for (const auto &route : rd.routes)
        for (int ei : route.tree_edges)
            bs.bits[layout.switch_offset(rd.rrg->edges[ei].switch_id)] = 1;
    return bs;
}

namespace {

void put_u32(std::ostream &os, uint32_t v)
{
    for (int i = 0; i < 4; i++)
        os.put(char((v >> (8 * i)) & 0xff));
}

uint32_t get_u32(std::istream &is)
{
    uint32_t v = 0;
    for (int i = 0; i < 4; i++) {
        int c = is.get();
        if (c < 0)
            throw ParseError("<bitstream>", 0, "truncated header");
        v |= uint32_t(c & 0xff) << (8 * i);
    }
    return v;
}

} // namespace

void write_bitstream(std::ostream &os, const Bitstream &bs)
{
    os.write("CSFB", 4);
    put_u32(os, bs.arch_hash);
    put_u32(os, bs.context_id);
    put_u32(os, uint32_t(bs.bit_length()));
    uint8_t acc = 0;
    int nbits = 0;
    for (size_t i = 0; i < bs.bits.size(); i++) {
        acc |= uint8_t(bs.bits[i] & 1) << nbits;
        if (++nbits == 8) {
            os.put(char(acc));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0)
        os.put(char(acc));
}

Bitstream read_bitstream(std::istream &is)
{
    char magic[4];
    is.read(magic, 4);
    if (is.gcount() != 4 || std::string(magic, 4) != "CSFB")
        throw ParseError("<bitstream>", 0, "bad magic");
    Bitstream bs;
    bs.arch_hash = get_u32(is);
    bs.context_id = get_u32(is);
    uint32_t len = get_u32(is);
    bs.bits.assign(len, 0);
    uint8_t acc = 0;
    for (uint32_t i = 0; i < len; i++) {
        if (i % 8 == 0) {
            int c = is.get();
            if (c < 0)
                throw ParseError("<bitstream>", 0, "truncated payload");
            acc = uint8_t(c);
        }
        bs.bits[i] = (acc >> (i % 8)) & 1;
    }
    return bs;
}

} // namespace csfpga
