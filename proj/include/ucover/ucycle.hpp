#pragma once

// s-shift universal cycles: window extraction, verification against a host
// system, and the constructive two-way conversion with alternating
// hamiltonian cycles.
//
// Window convention: block i is the width-k window starting at index s*i
// (indices mod the sequence length), so consecutive windows of a (k-1)-shift
// cycle overlap in exactly one point, the join color of the cycle edge.

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "ucover/core.hpp"
#include "ucover/cycle_graph.hpp"
#include "ucover/result.hpp"

namespace ucover {

struct ShiftUcycle {
    std::vector<int> seq;
    int shift = 2;  // s
    int rank = 3;   // k, the window width
    int order = 0;  // n
    // Single-block system (order 3): the sequence is the block itself and the
    // length-is-s*m invariant is waived.
    bool degenerate = false;

    int block_count() const {
        return degenerate ? 1 : static_cast<int>(seq.size()) / shift;
    }
};

inline Result<std::vector<Block>> blocks_of(const ShiftUcycle& u) {
    if (u.degenerate) {
        Block b = u.seq;
        Block key = sorted_block(b);
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            return Result<std::vector<Block>>::failure("degenerate window repeats a point");
        return Result<std::vector<Block>>::success({b});
    }
    const int len = static_cast<int>(u.seq.size());
    if (len == 0 || len % u.shift != 0)
        return Result<std::vector<Block>>::failure("sequence length is not a multiple of the shift");
    const int m = len / u.shift;
    std::vector<Block> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        Block w;
        w.reserve(u.rank);
        for (int j = 0; j < u.rank; ++j) w.push_back(u.seq[(u.shift * i + j) % len]);
        Block key = sorted_block(w);
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            return Result<std::vector<Block>>::failure("malformed window at i=" + std::to_string(i));
        out.push_back(std::move(w));
    }
    return Result<std::vector<Block>>::success(std::move(out));
}

// Valid iff the windows of u run through the blocks of s exactly once.
inline VerificationReport verify_shift_ucycle(const ShiftUcycle& u, const SetSystem& s) {
    VerificationReport report;
    auto windows = blocks_of(u);
    if (!windows) {
        report.add(ViolationKind::MalformedWindow, windows.error);
        return report;
    }
    if (windows->size() != s.blocks.size())
        report.add(ViolationKind::WrongSize,
                   "cycle yields " + std::to_string(windows->size()) + " windows for " +
                       std::to_string(s.blocks.size()) + " blocks");

    std::map<Block, int> host;
    for (const auto& b : s.blocks) ++host[sorted_block(b)];
    std::map<Block, int> seen;
    for (int i = 0; i < static_cast<int>(windows->size()); ++i) {
        Block key = sorted_block((*windows)[i]);
        if (++seen[key] == 2)
            report.add(ViolationKind::DuplicateBlock,
                       "window " + std::to_string(i) + " repeats an earlier window");
        if (!host.contains(key)) {
            std::ostringstream what;
            what << "window " << i << " is not a block of the system";
            report.add(ViolationKind::WrongBlock, what.str(), (*windows)[i]);
        }
    }
    for (const auto& [key, mult] : host) {
        auto it = seen.find(key);
        int got = it == seen.end() ? 0 : it->second;
        if (got < mult)
            report.add(ViolationKind::UncoveredPair,
                       "a block of the system is missed by the windows", key);
    }
    return report;
}

// Builds the (k-1)-shift universal cycle of a k-uniform system from an
// alternating hamiltonian cycle: each block is ordered (in-join, interior
// ascending, out-join) and contributes its last k-1 points. A single-block
// system yields the degenerate sequence of its points in ascending order.
inline ShiftUcycle from_cah(const SetSystem& s, const ColoredCycle& c) {
    auto report = verify_cah(s, c, false);
    if (!report.valid())
        throw std::invalid_argument("from_cah: cycle certificate invalid: " + report.summary());
    const int m = c.length();
    ShiftUcycle u;
    u.order = s.order;
    if (m == 1) {
        u.seq = sorted_block(s.blocks[c.block_ids[0]]);
        u.rank = static_cast<int>(u.seq.size());
        u.shift = u.rank - 1;
        u.degenerate = true;
        return u;
    }
    const int k = static_cast<int>(s.blocks[c.block_ids[0]].size());
    if (k < 3) throw std::invalid_argument("from_cah: rank must be at least 3");
    u.rank = k;
    u.shift = k - 1;
    u.seq.assign(static_cast<std::size_t>(m) * (k - 1), 0);
    for (int i = 0; i < m; ++i) {
        const int in = c.joins[(i + m - 1) % m];
        const int out = c.joins[i];
        Block interior;
        for (int p : s.blocks[c.block_ids[i]])
            if (p != in && p != out) interior.push_back(p);
        std::sort(interior.begin(), interior.end());
        if (static_cast<int>(interior.size()) != k - 2)
            throw std::invalid_argument("from_cah: joins do not fit block at position " +
                                        std::to_string(i));
        // window i occupies positions (k-1)*i .. (k-1)*i+k-1; its first point
        // is the in-join, already written as the previous window's last point
        int at = (k - 1) * i;
        u.seq[at % u.seq.size()] = in;
        for (int j = 0; j < k - 2; ++j) u.seq[(at + 1 + j) % u.seq.size()] = interior[j];
        u.seq[(at + k - 1) % u.seq.size()] = out;
    }
    return u;
}

// Inverse of from_cah: recovers the block order and joins from a verified
// (k-1)-shift universal cycle, expressed with s's block indices.
inline ColoredCycle to_cah(const ShiftUcycle& u, const SetSystem& s) {
    auto report = verify_shift_ucycle(u, s);
    if (!report.valid())
        throw std::invalid_argument("to_cah: cycle fails verification: " + report.summary());
    auto windows = blocks_of(u);
    std::map<Block, int> index;
    for (int i = 0; i < static_cast<int>(s.blocks.size()); ++i)
        index[sorted_block(s.blocks[i])] = i;

    ColoredCycle c;
    const int m = static_cast<int>(windows->size());
    for (const auto& w : *windows) c.block_ids.push_back(index.at(sorted_block(w)));
    if (m == 1) return c;
    if (u.shift != u.rank - 1)
        throw std::invalid_argument("to_cah: requires shift k-1");
    const int len = static_cast<int>(u.seq.size());
    for (int i = 0; i < m; ++i) c.joins.push_back(u.seq[(u.shift * (i + 1)) % len]);
    return c;
}

inline std::string render_ucycle(const ShiftUcycle& u) {
    std::ostringstream out;
    out << "ucycle s=" << u.shift << " k=" << u.rank << " n=" << u.order << ":";
    for (int x : u.seq) out << ' ' << x;
    return out.str();
}

inline Result<ShiftUcycle> parse_ucycle(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag != "ucycle") return Result<ShiftUcycle>::failure("expected 'ucycle' header");
    ShiftUcycle u;
    std::string kv;
    while (in >> kv) {
        if (kv.back() == ':') {
            kv.pop_back();
            auto eq = kv.find('=');
            if (eq != std::string::npos) {
                std::string key = kv.substr(0, eq);
                int val = std::stoi(kv.substr(eq + 1));
                if (key == "s") u.shift = val;
                else if (key == "k") u.rank = val;
                else if (key == "n") u.order = val;
            }
            break;
        }
        auto eq = kv.find('=');
        if (eq == std::string::npos) return Result<ShiftUcycle>::failure("bad token: " + kv);
        std::string key = kv.substr(0, eq);
        int val = std::stoi(kv.substr(eq + 1));
        if (key == "s") u.shift = val;
        else if (key == "k") u.rank = val;
        else if (key == "n") u.order = val;
        else return Result<ShiftUcycle>::failure("unknown key: " + key);
    }
    int x;
    while (in >> x) u.seq.push_back(x);
    if (u.seq.empty()) return Result<ShiftUcycle>::failure("empty sequence");
    if (static_cast<int>(u.seq.size()) == u.rank && u.seq.size() % u.shift != 0)
        u.degenerate = true;
    return Result<ShiftUcycle>::success(std::move(u));
}

}  // namespace ucover
