#pragma once

// Edge-colored block intersection graphs and alternating-cycle machinery:
// cycle certificates, join inference for block listings, the color-preserving
// cycle merge, and the assembler that fuses a family of cycles into one.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "ucover/core.hpp"
#include "ucover/result.hpp"

namespace ucover {

// Cyclic block sequence with one join color per adjacency. joins[i] colors
// the edge between block_ids[i] and block_ids[(i+1) mod m]. A single-block
// cycle has no joins and stands for the degenerate order-3 case.
struct ColoredCycle {
    std::vector<int> block_ids;
    std::vector<int> joins;

    int length() const { return static_cast<int>(block_ids.size()); }
};

// Block intersection multigraph: |A ∩ A'| parallel edges between blocks A and
// A', one per shared point, colored by that point.
struct BIGraph {
    int block_count = 0;
    std::map<std::pair<int, int>, std::vector<int>> edges;  // (i<j) -> shared points

    int multiplicity(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return it == edges.end() ? 0 : static_cast<int>(it->second.size());
    }
    std::vector<int> colors(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return it == edges.end() ? std::vector<int>{} : it->second;
    }
};

inline std::vector<int> block_intersection(const Block& a, const Block& b) {
    Block sa = sorted_block(a), sb = sorted_block(b);
    std::vector<int> out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

inline BIGraph build_big(const SetSystem& s) {
    BIGraph g;
    g.block_count = static_cast<int>(s.blocks.size());
    for (int i = 0; i < g.block_count; ++i)
        for (int j = i + 1; j < g.block_count; ++j) {
            auto shared = block_intersection(s.blocks[i], s.blocks[j]);
            if (!shared.empty()) g.edges[{i, j}] = std::move(shared);
        }
    return g;
}

// Certificate check: c is an alternating hamiltonian cycle of s, and colorful
// when required. A single-block cycle is accepted as trivially valid; a
// two-block "cycle" is rejected (no simple cycle of length two exists).
inline VerificationReport verify_cah(const SetSystem& s, const ColoredCycle& c,
                                     bool require_colorful) {
    VerificationReport report;
    const int m = c.length();
    const int b = static_cast<int>(s.blocks.size());

    if (m == 0) {
        report.add(ViolationKind::NotHamiltonian, "empty cycle");
        return report;
    }
    std::vector<int> seen(b, 0);
    for (int id : c.block_ids) {
        if (id < 0 || id >= b) {
            report.add(ViolationKind::OutOfRange, "cycle references block " + std::to_string(id));
            return report;
        }
        if (++seen[id] > 1)
            report.add(ViolationKind::NotHamiltonian,
                       "block " + std::to_string(id) + " visited more than once", {}, {id});
    }
    if (m != b)
        report.add(ViolationKind::NotHamiltonian,
                   "cycle visits " + std::to_string(m) + " of " + std::to_string(b) + " blocks");
    if (m == 1) return report;  // degenerate: no joins to check
    if (m == 2) {
        report.add(ViolationKind::NotHamiltonian, "no simple cycle of length 2");
        return report;
    }
    if (static_cast<int>(c.joins.size()) != m) {
        report.add(ViolationKind::BadJoin, "expected one join per adjacency");
        return report;
    }
    for (int i = 0; i < m; ++i) {
        int x = c.joins[i];
        const Block& lhs = s.blocks[c.block_ids[i]];
        const Block& rhs = s.blocks[c.block_ids[(i + 1) % m]];
        auto in = [x](const Block& blk) { return std::find(blk.begin(), blk.end(), x) != blk.end(); };
        if (!in(lhs) || !in(rhs))
            report.add(ViolationKind::BadJoin,
                       "join " + std::to_string(x) + " at position " + std::to_string(i) +
                           " is not shared by the adjacent blocks",
                       {x});
        if (x == c.joins[(i + 1) % m])
            report.add(ViolationKind::NotAlternating,
                       "adjacent edges at positions " + std::to_string(i) + "," +
                           std::to_string((i + 1) % m) + " both have color " + std::to_string(x),
                       {x});
    }
    if (require_colorful) {
        std::set<int> used(c.joins.begin(), c.joins.end());
        std::vector<int> missing;
        for (int p = 1; p <= s.order; ++p)
            if (!used.contains(p)) missing.push_back(p);
        if (!missing.empty()) {
            std::ostringstream what;
            what << missing.size() << " color(s) unused, first " << missing.front();
            report.add(ViolationKind::NotColorful, what.str(), missing);
        }
    }
    return report;
}

// Chooses one color per adjacency of the given cyclic block order so that
// adjacent edges get distinct colors, by backtracking with candidate colors
// tried in ascending point order (deterministic). When `require_colorful` is
// set, only assignments using every point of s are accepted.
inline Result<ColoredCycle> infer_joins(const SetSystem& s, std::vector<int> block_order,
                                        bool require_colorful = false) {
    const int m = static_cast<int>(block_order.size());
    if (m == 0) return Result<ColoredCycle>::failure("empty block order");
    if (m == 1) {
        if (require_colorful && static_cast<int>(s.blocks[block_order[0]].size()) != s.order)
            return Result<ColoredCycle>::failure("single block does not span the point set");
        return Result<ColoredCycle>::success({std::move(block_order), {}});
    }
    if (m == 2) return Result<ColoredCycle>::failure("no simple cycle of length 2");

    std::vector<std::vector<int>> cand(m);
    for (int i = 0; i < m; ++i) {
        cand[i] = block_intersection(s.blocks[block_order[i]], s.blocks[block_order[(i + 1) % m]]);
        if (cand[i].empty())
            return Result<ColoredCycle>::failure(
                "adjacent blocks at positions " + std::to_string(i) + "," +
                std::to_string((i + 1) % m) + " share no point");
    }

    std::vector<int> joins(m, 0);
    std::vector<int> color_use(s.order + 1, 0);
    int distinct = 0;

    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        for (int x : cand[i]) {
            if (i > 0 && joins[i - 1] == x) continue;
            if (i == m - 1 && joins[0] == x) continue;
            if (require_colorful) {
                // every still-missing color needs one of the remaining slots
                int missing = s.order - distinct - (color_use[x] == 0 ? 1 : 0);
                if (missing > m - i - 1) continue;
            }
            joins[i] = x;
            if (color_use[x]++ == 0) ++distinct;
            if (self(self, i + 1)) return true;
            if (--color_use[x] == 0) --distinct;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        return Result<ColoredCycle>::failure(
            require_colorful ? "no colorful alternating join assignment exists"
                             : "no alternating join assignment exists");
    return Result<ColoredCycle>::success({std::move(block_order), std::move(joins)});
}

// Cycle merge: deletes one edge of color x from each cycle and reconnects the
// endpoints with two new edges of color x, giving one alternating cycle of
// length m1+m2. `at` designates the deleted edge position in each cycle.
inline ColoredCycle merge_cycles(const ColoredCycle& c1, const ColoredCycle& c2,
                                 std::pair<int, int> at) {
    const int m1 = c1.length(), m2 = c2.length();
    if (m1 < 3 || m2 < 3) throw std::invalid_argument("merge_cycles: cycles must have edges");
    auto [p1, p2] = at;
    if (p1 < 0 || p1 >= m1 || p2 < 0 || p2 >= m2)
        throw std::invalid_argument("merge_cycles: edge position out of range");
    const int x = c1.joins[p1];
    if (x != c2.joins[p2])
        throw std::invalid_argument("merge_cycles: designated edges have different colors");
    {
        std::set<int> ids(c1.block_ids.begin(), c1.block_ids.end());
        for (int id : c2.block_ids)
            if (ids.contains(id)) throw std::invalid_argument("merge_cycles: cycles share a block");
    }

    // Rotate both cycles so the deleted edge is the closing one, then stitch
    // the second cycle in reversed orientation.
    auto rotated = [](const ColoredCycle& c, int p) {
        const int m = c.length();
        ColoredCycle r;
        r.block_ids.reserve(m);
        r.joins.reserve(m);
        for (int i = 0; i < m; ++i) {
            r.block_ids.push_back(c.block_ids[(p + 1 + i) % m]);
            r.joins.push_back(c.joins[(p + 1 + i) % m]);
        }
        return r;
    };
    ColoredCycle a = rotated(c1, p1), b = rotated(c2, p2);

    ColoredCycle out;
    out.block_ids = a.block_ids;
    out.block_ids.insert(out.block_ids.end(), b.block_ids.rbegin(), b.block_ids.rend());
    out.joins.assign(a.joins.begin(), a.joins.end() - 1);
    out.joins.push_back(x);
    for (int i = m2 - 2; i >= 0; --i) out.joins.push_back(b.joins[i]);
    out.joins.push_back(x);
    return out;
}

// Splices a lone block into the cycle: replaces one edge (B_i, B_{i+1}) by
// (B_i, blk), (blk, B_{i+1}) with distinct colors that keep alternation.
// Positions and colors are scanned in ascending order.
inline Result<ColoredCycle> insert_single_block(const SetSystem& s, const ColoredCycle& c,
                                                int block_id) {
    const int m = c.length();
    if (m < 3) return Result<ColoredCycle>::failure("host cycle has no edges");
    const Block& nb = s.blocks[block_id];
    for (int i = 0; i < m; ++i) {
        const int next = (i + 1) % m;
        auto left = block_intersection(s.blocks[c.block_ids[i]], nb);
        auto right = block_intersection(nb, s.blocks[c.block_ids[next]]);
        const int prev_join = c.joins[(i + m - 1) % m];
        const int next_join = c.joins[next];
        for (int c1 : left) {
            if (c1 == prev_join) continue;
            for (int c2 : right) {
                if (c2 == c1 || c2 == next_join) continue;
                ColoredCycle out;
                out.block_ids.reserve(m + 1);
                out.joins.reserve(m + 1);
                for (int j = 0; j <= i; ++j) {
                    out.block_ids.push_back(c.block_ids[j]);
                    if (j < i) out.joins.push_back(c.joins[j]);
                }
                out.joins.push_back(c1);
                out.block_ids.push_back(block_id);
                out.joins.push_back(c2);
                for (int j = next; j < m; ++j) {
                    out.block_ids.push_back(c.block_ids[j]);
                    if (j < m - 1) out.joins.push_back(c.joins[j]);
                }
                out.joins.push_back(c.joins[m - 1]);
                return Result<ColoredCycle>::success(std::move(out));
            }
        }
    }
    return Result<ColoredCycle>::failure("no valid insertion point for block " +
                                         std::to_string(block_id));
}

struct AssembleOptions {
    std::set<int> priority;     // indices of input cycles to seed and prefer
    long long node_budget = 1'000'000;
};

// Repeatedly merges cycles that share a join color until one remains, then
// splices in any single-block members. Inputs must be pairwise block-disjoint
// and jointly cover every block of the host. Merging any two cycles with a
// common color keeps the union mergeable (join color sets only grow), so a
// connectivity check up front decides success; the budget is a safety net.
inline Result<ColoredCycle> assemble(std::vector<ColoredCycle> cycles, const SetSystem& host,
                                     const AssembleOptions& opts = {}) {
    if (cycles.empty()) return Result<ColoredCycle>::failure("no cycles to assemble");

    std::vector<ColoredCycle> singletons, proper;
    std::vector<int> proper_index;  // original indices, for priority lookup
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
        if (cycles[i].length() == 1)
            singletons.push_back(std::move(cycles[i]));
        else {
            proper.push_back(std::move(cycles[i]));
            proper_index.push_back(i);
        }
    }

    auto finish = [&](ColoredCycle merged) -> Result<ColoredCycle> {
        for (const auto& one : singletons) {
            auto ins = insert_single_block(host, merged, one.block_ids[0]);
            if (!ins) return Result<ColoredCycle>::failure(ins.error);
            merged = std::move(*ins);
        }
        auto report = verify_cah(host, merged, false);
        if (!report.valid())
            return Result<ColoredCycle>::failure("assembled cycle failed verification: " +
                                                 report.summary());
        return Result<ColoredCycle>::success(std::move(merged));
    };

    if (proper.empty()) {
        if (singletons.size() == 1) {
            auto report = verify_cah(host, singletons[0], false);
            if (!report.valid())
                return Result<ColoredCycle>::failure("assembled cycle failed verification: " +
                                                     report.summary());
            return Result<ColoredCycle>::success(std::move(singletons[0]));
        }
        return Result<ColoredCycle>::failure("cannot join multiple single-block cycles");
    }

    // Color-sharing connectivity: a partition with more than one part is a
    // proof that no merge order can succeed.
    {
        const int k = static_cast<int>(proper.size());
        std::vector<int> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::map<int, int> color_rep;
        for (int i = 0; i < k; ++i)
            for (int x : proper[i].joins) {
                auto [it, fresh] = color_rep.emplace(x, i);
                if (!fresh) parent[find(i)] = find(it->second);
            }
        std::map<int, std::vector<int>> parts;
        for (int i = 0; i < k; ++i) parts[find(i)].push_back(i);
        if (parts.size() > 1) {
            std::ostringstream what;
            what << "join colors split the cycles into " << parts.size() << " components:";
            for (auto& [root, members] : parts) {
                what << " {";
                for (std::size_t i = 0; i < members.size(); ++i)
                    what << (i ? "," : "") << members[i];
                what << "}";
            }
            return Result<ColoredCycle>::failure(what.str());
        }
    }

    auto color_set = [](const ColoredCycle& c) {
        return std::set<int>(c.joins.begin(), c.joins.end());
    };

    // Seed with the preferred cycle, then merge greedily: most shared colors
    // first, priority members ahead of the rest.
    int seed = 0;
    for (int i = 1; i < static_cast<int>(proper.size()); ++i) {
        bool ip = opts.priority.contains(proper_index[i]), sp = opts.priority.contains(proper_index[seed]);
        if (ip != sp ? ip : proper[i].length() > proper[seed].length()) seed = i;
    }
    ColoredCycle acc = std::move(proper[seed]);
    proper.erase(proper.begin() + seed);
    proper_index.erase(proper_index.begin() + seed);
    std::set<int> acc_colors = color_set(acc);

    long long nodes = 0;
    while (!proper.empty()) {
        if (++nodes > opts.node_budget)
            return Result<ColoredCycle>::failure("assemble: node budget exhausted");
        int best = -1, best_shared = 0;
        bool best_prio = false;
        for (int i = 0; i < static_cast<int>(proper.size()); ++i) {
            int shared = 0;
            for (int x : color_set(proper[i]))
                if (acc_colors.contains(x)) ++shared;
            if (shared == 0) continue;
            bool prio = opts.priority.contains(proper_index[i]);
            if (best == -1 || (prio != best_prio ? prio : shared > best_shared)) {
                best = i;
                best_shared = shared;
                best_prio = prio;
            }
        }
        if (best == -1)
            return Result<ColoredCycle>::failure("assemble: stuck with disjoint join colors");

        int x = -1;
        for (int cand : color_set(proper[best]))
            if (acc_colors.contains(cand)) { x = cand; break; }
        auto edge_with = [](const ColoredCycle& c, int color) {
            for (int i = 0; i < c.length(); ++i)
                if (c.joins[i] == color) return i;
            return -1;
        };
        acc = merge_cycles(acc, proper[best], {edge_with(acc, x), edge_with(proper[best], x)});
        for (int col : proper[best].joins) acc_colors.insert(col);
        proper.erase(proper.begin() + best);
        proper_index.erase(proper_index.begin() + best);
    }
    return finish(std::move(acc));
}

}  // namespace ucover
