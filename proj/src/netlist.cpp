#include "csfpga/netlist.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace csfpga {

int Netlist::max_fanin() const
{
    int m = 0;
    for (const auto &l : luts)
        m = std::max(m, int(l.fanin.size()));
    return m;
}

std::vector<int> Netlist::topo_order() const
{
    // driver lut index per net, -1 for PIs and latch outputs
    std::vector<int> driver(net_count(), -1);
    for (size_t i = 0; i < luts.size(); i++)
        driver[luts[i].out_net] = int(i);

    std::vector<int> state(luts.size(), 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<int> order;
    std::vector<int> stack_names;

    std::function<void(int)> visit = [&](int li) {
        if (state[li] == 2)
            return;
        if (state[li] == 1) {
            std::string cyc;
            bool in_cycle = false;
            for (int s : stack_names) {
                if (s == li)
                    in_cycle = true;
                if (in_cycle)
                    cyc += net_names[luts[s].out_net] + " -> ";
            }
            cyc += net_names[luts[li].out_net];
            throw ValidationError("combinational cycle: " + cyc);
        }
        state[li] = 1;
        stack_names.push_back(li);
        for (int net : luts[li].fanin)
            if (driver[net] >= 0)
                visit(driver[net]);
        stack_names.pop_back();
        state[li] = 2;
        order.push_back(li);
    };
    for (size_t i = 0; i < luts.size(); i++)
        visit(int(i));
    return order;
}

void Netlist::validate() const
{
    std::vector<int> drivers(net_count(), 0);
    for (int n : inputs)
        drivers[n]++;
    for (const auto &l : luts)
        drivers[l.out_net]++;
    for (const auto &l : latches)
        drivers[l.q_net]++;
    for (int n = 0; n < net_count(); n++) {
        if (drivers[n] > 1)
            throw ValidationError("net '" + net_names[n] + "' has " + std::to_string(drivers[n]) + " drivers");
        if (drivers[n] == 0)
            throw ValidationError("net '" + net_names[n] + "' has no driver");
    }
    topo_order(); // rejects combinational cycles
}

namespace {

struct Cover {
    std::vector<std::string> nets; // inputs then output
    std::vector<std::pair<std::string, char>> rows;
    int line = 0;
};

uint64_t cover_to_bits(const Cover &c, int k, const std::string &file)
{
    bool on_set = true;
    if (!c.rows.empty())
        on_set = (c.rows[0].second == '1');
    uint64_t bits = on_set ? 0 : ((k == 6) ? ~uint64_t(0) : (uint64_t(1) << (1 << k)) - 1);
    for (const auto &[pattern, out] : c.rows) {
        if ((out == '1') != on_set)
            throw ParseError(file, c.line, "cover mixes on-set and off-set rows");
        if (int(pattern.size()) != k)
            throw ParseError(file, c.line, "cover row width does not match input count");
        // expand '-' positions over all minterms they cover
        std::vector<int> free_pos;
        uint64_t base = 0;
        for (int i = 0; i < k; i++) {
            char ch = pattern[i];
            if (ch == '1')
                base |= uint64_t(1) << i;
            else if (ch == '-')
                free_pos.push_back(i);
            else if (ch != '0')
                throw ParseError(file, c.line, std::string("bad cover character '") + ch + "'");
        }
        for (uint64_t m = 0; m < (uint64_t(1) << free_pos.size()); m++) {
            uint64_t idx = base;
            for (size_t j = 0; j < free_pos.size(); j++)
                if ((m >> j) & 1)
                    idx |= uint64_t(1) << free_pos[j];
            if (on_set)
                bits |= uint64_t(1) << idx;
            else
                bits &= ~(uint64_t(1) << idx);
        }
    }
    return bits;
}

} // namespace

Netlist parse_netlist(const std::string &text, const std::string &filename)
{
    Netlist n;
    auto net_id = [&](const std::string &name) {
        auto it = n.net_ids.find(name);
        if (it != n.net_ids.end())
            return it->second;
        int id = n.net_count();
        n.net_ids[name] = id;
        n.net_names.push_back(name);
        return id;
    };

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    Cover pending;
    bool have_pending = false;
    bool ended = false;

    auto flush_cover = [&]() {
        if (!have_pending)
            return;
        int k = int(pending.nets.size()) - 1;
        if (k < 0)
            throw ParseError(filename, pending.line, ".names needs at least an output");
        LutNode lut;
        lut.name = pending.nets.back();
        lut.out_net = net_id(lut.name);
        for (int i = 0; i < k; i++)
            lut.fanin.push_back(net_id(pending.nets[i]));
        if (k > 6)
            throw ParseError(filename, pending.line, "LUT arity " + std::to_string(k) + " exceeds 6");
        lut.tt.k = k;
        if (k == 0) {
            // constant node: single row "0"/"1" or empty (constant 0)
            int v = 0;
            if (!pending.rows.empty())
                v = pending.rows[0].second == '1';
            lut.tt.bits = v;
        } else {
            lut.tt.bits = cover_to_bits(pending, k, filename);
        }
        n.luts.push_back(lut);
        have_pending = false;
        pending = Cover{};
    };

    while (std::getline(is, raw)) {
        lineno++;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (toks.empty())
            continue;
        if (ended)
            throw ParseError(filename, lineno, "content after .end");

        if (toks[0][0] == '.') {
            if (toks[0] != ".names")
                flush_cover();
            if (toks[0] == ".model") {
                n.model_name = toks.size() > 1 ? toks[1] : "";
            } else if (toks[0] == ".inputs") {
                for (size_t i = 1; i < toks.size(); i++)
                    n.inputs.push_back(net_id(toks[i]));
            } else if (toks[0] == ".outputs") {
                for (size_t i = 1; i < toks.size(); i++)
                    n.outputs.push_back(net_id(toks[i]));
            } else if (toks[0] == ".names") {
                flush_cover();
                pending.nets.assign(toks.begin() + 1, toks.end());
                pending.line = lineno;
                have_pending = true;
            } else if (toks[0] == ".latch") {
                // .latch <d> <q> [<type> <ctrl>] [<init>]
                if (toks.size() < 3)
                    throw ParseError(filename, lineno, ".latch needs input and output");
                LatchNode l;
                l.d_net = net_id(toks[1]);
                l.q_net = net_id(toks[2]);
                l.name = toks[2];
                int init = 0;
                if (toks.size() == 4)
                    init = std::stoi(toks[3]);
                else if (toks.size() >= 6)
                    init = std::stoi(toks[5]);
                l.init = (init == 1) ? 1 : 0; // 'unknown' initializes to 0
                n.latches.push_back(l);
            } else if (toks[0] == ".end") {
                ended = true;
            } else {
                throw ParseError(filename, lineno, "unsupported construct '" + toks[0] + "'");
            }
        } else {
            if (!have_pending)
                throw ParseError(filename, lineno, "cover row outside .names");
            if (toks.size() == 1 && pending.nets.size() == 1) {
                pending.rows.push_back({"", toks[0][0]});
            } else if (toks.size() == 2) {
                pending.rows.push_back({toks[0], toks[1][0]});
            } else {
                throw ParseError(filename, lineno, "malformed cover row");
            }
        }
    }
    flush_cover();

    try {
        n.validate();
    } catch (ValidationError &e) {
        throw ValidationError(filename + ": " + e.what());
    }
    return n;
}

Netlist parse_netlist_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_netlist(ss.str(), path);
}

std::vector<std::vector<int>> simulate_netlist(const Netlist &n, const std::vector<std::vector<int>> &vectors)
{
    std::vector<int> order = n.topo_order();
    std::vector<int> value(n.net_count(), 0);
    std::vector<int> ff(n.latches.size());
    for (size_t i = 0; i < n.latches.size(); i++)
        ff[i] = n.latches[i].init;

    std::vector<std::vector<int>> traces;
    for (const auto &vec : vectors) {
        if (vec.size() != n.inputs.size())
            throw DimensionError("simulate: vector width " + std::to_string(vec.size()) + " != " +
                                 std::to_string(n.inputs.size()) + " primary inputs");
        for (size_t i = 0; i < n.inputs.size(); i++)
            value[n.inputs[i]] = vec[i] ? 1 : 0;
        for (size_t i = 0; i < n.latches.size(); i++)
            value[n.latches[i].q_net] = ff[i];
        for (int li : order) {
            const LutNode &l = n.luts[li];
            uint64_t idx = 0;
            for (size_t i = 0; i < l.fanin.size(); i++)
                if (value[l.fanin[i]])
                    idx |= uint64_t(1) << i;
            value[l.out_net] = l.tt.eval(idx);
        }
        std::vector<int> outs;
        for (int net : n.outputs)
            outs.push_back(value[net]);
        traces.push_back(outs);
        for (size_t i = 0; i < n.latches.size(); i++)
            ff[i] = value[n.latches[i].d_net];
    }
    return traces;
}

} // namespace csfpga
