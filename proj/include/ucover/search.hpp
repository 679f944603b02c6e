#pragma once

// Bounded combinatorial searches backing catalog repair and the ingredient
// factory: covering completion, triangle-system (GDD) block search, and
// alternating hamiltonian cycle search. All searches are deterministic for a
// fixed seed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ucover/core.hpp"
#include "ucover/cycle_graph.hpp"
#include "ucover/result.hpp"

namespace ucover {

// splitmix64; used to derive independent stream seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = base;
    for (unsigned char c : tag) h = mix_seed(h ^ c);
    return h;
}

// Completes a triple system to a covering of exactly `target` blocks by
// adding triples that cover all still-uncovered pairs. Deterministic DFS:
// first uncovered pair, third points ascending. Returns the added blocks.
inline Result<std::vector<Block>> complete_covering(const SetSystem& s, long long target,
                                                    long long node_budget = 2'000'000) {
    const int n = s.order;
    detail::PairTable table(n);
    std::set<Block> used;
    for (const auto& b : s.blocks) {
        Block key = sorted_block(b);
        used.insert(key);
        for (std::size_t i = 0; i < key.size(); ++i)
            for (std::size_t j = i + 1; j < key.size(); ++j) ++table.at(key[i], key[j]);
    }
    const long long room = target - static_cast<long long>(s.blocks.size());
    if (room < 0) return Result<std::vector<Block>>::failure("block count already exceeds target");

    auto first_uncovered = [&]() -> std::pair<int, int> {
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (table.get(x, y) == 0) return {x, y};
        return {0, 0};
    };

    std::vector<Block> added;
    long long nodes = 0;
    auto dfs = [&](auto&& self, long long left) -> bool {
        if (++nodes > node_budget) return false;
        auto [x, y] = first_uncovered();
        if (x == 0) return true;
        if (left == 0) return false;
        for (int z = 1; z <= n; ++z) {
            if (z == x || z == y) continue;
            Block key = sorted_block({x, y, z});
            if (used.contains(key)) continue;
            used.insert(key);
            ++table.at(x, y);
            ++table.at(x, z);
            ++table.at(y, z);
            added.push_back(key);
            if (self(self, left - 1)) return true;
            added.pop_back();
            --table.at(x, y);
            --table.at(x, z);
            --table.at(y, z);
            used.erase(key);
        }
        return false;
    };
    if (!dfs(dfs, room))
        return Result<std::vector<Block>>::failure(
            nodes > node_budget ? "completion budget exhausted"
                                : "no completion with the requested block count");
    return Result<std::vector<Block>>::success(std::move(added));
}

// Searches for the triple set of a {3}-GDD on the given groups: every
// cross-group pair in exactly one triple, no within-group pairs. MRV
// backtracking (pair with fewest completions first) with seeded candidate
// shuffles and restarts.
inline Result<std::vector<Block>> search_gdd3_blocks(int n, const std::vector<Group>& groups,
                                                     std::uint64_t seed, int restarts = 20,
                                                     long long nodes_per_restart = 400'000) {
    std::vector<int> group_of(n + 1, 0);
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi)
        for (int p : groups[gi]) group_of[p] = gi + 1;

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed + attempt));
        detail::PairTable cov(n);
        std::vector<Block> blocks;
        long long nodes = 0;

        auto candidates = [&](int x, int y) {
            std::vector<int> zs;
            for (int z = 1; z <= n; ++z) {
                if (z == x || z == y) continue;
                if (group_of[z] == group_of[x] || group_of[z] == group_of[y]) continue;
                if (cov.get(x, z) || cov.get(y, z)) continue;
                zs.push_back(z);
            }
            return zs;
        };
        auto pick_pair = [&]() -> std::tuple<int, int, std::vector<int>> {
            int bx = 0, by = 0;
            std::vector<int> best;
            bool found = false;
            for (int x = 1; x <= n && (!found || best.size() > 1); ++x)
                for (int y = x + 1; y <= n; ++y) {
                    if (group_of[x] == group_of[y] || cov.get(x, y)) continue;
                    auto zs = candidates(x, y);
                    if (!found || zs.size() < best.size()) {
                        bx = x; by = y; best = std::move(zs); found = true;
                        if (best.empty()) return {bx, by, best};
                    }
                }
            if (!found) return {0, 0, {}};
            return {bx, by, best};
        };

        auto dfs = [&](auto&& self) -> bool {
            if (++nodes > nodes_per_restart) return false;
            auto [x, y, zs] = pick_pair();
            if (x == 0) return true;
            std::shuffle(zs.begin(), zs.end(), rng);
            for (int z : zs) {
                ++cov.at(x, y); ++cov.at(x, z); ++cov.at(y, z);
                blocks.push_back(sorted_block({x, y, z}));
                if (self(self)) return true;
                blocks.pop_back();
                --cov.at(x, y); --cov.at(x, z); --cov.at(y, z);
            }
            return false;
        };
        if (dfs(dfs)) return Result<std::vector<Block>>::success(std::move(blocks));
    }
    return Result<std::vector<Block>>::failure("triple-system search exhausted its budget");
}

// Triangle decomposition of an explicit pair list (each pair covered exactly
// once; triples may only use listed pairs). Used for the leftover graphs of
// mixed-size design searches.
inline Result<std::vector<Block>> decompose_triangles(int n, const std::set<std::pair<int, int>>& pairs,
                                                      std::uint64_t seed, int restarts = 20,
                                                      long long nodes_per_restart = 400'000) {
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed + 0x5eedULL + attempt));
        std::set<std::pair<int, int>> left = pairs;
        std::vector<Block> blocks;
        long long nodes = 0;
        auto has = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            return left.count({a, b}) != 0;
        };
        auto erase = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            left.erase({a, b});
        };
        auto insert = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            left.insert({a, b});
        };
        auto dfs = [&](auto&& self) -> bool {
            if (++nodes > nodes_per_restart) return false;
            if (left.empty()) return true;
            // fewest-completions pair
            std::pair<int, int> best{0, 0};
            std::vector<int> best_z;
            bool found = false;
            for (const auto& [x, y] : left) {
                std::vector<int> zs;
                for (int z = 1; z <= n; ++z)
                    if (z != x && z != y && has(x, z) && has(y, z)) zs.push_back(z);
                if (!found || zs.size() < best_z.size()) {
                    best = {x, y}; best_z = std::move(zs); found = true;
                    if (best_z.empty()) break;
                }
                if (best_z.size() <= 1) break;
            }
            auto [x, y] = best;
            std::shuffle(best_z.begin(), best_z.end(), rng);
            for (int z : best_z) {
                erase(x, y); erase(x, z); erase(y, z);
                blocks.push_back(sorted_block({x, y, z}));
                if (self(self)) return true;
                blocks.pop_back();
                insert(x, y); insert(x, z); insert(y, z);
            }
            return false;
        };
        if (dfs(dfs)) return Result<std::vector<Block>>::success(std::move(blocks));
    }
    return Result<std::vector<Block>>::failure("triangle decomposition search exhausted its budget");
}

// Alternating hamiltonian cycle search in the block intersection graph:
// randomized greedy path extension with backtracking and restarts. Colorful
// assignments are requested from the join inference pass afterwards.
inline Result<ColoredCycle> search_cah_cycle(const SetSystem& s, bool require_colorful,
                                             std::uint64_t seed, int restarts = 60,
                                             long long nodes_per_restart = 200'000) {
    const int b = static_cast<int>(s.blocks.size());
    if (b == 0) return Result<ColoredCycle>::failure("no blocks");
    if (b == 1) return infer_joins(s, {0}, require_colorful);
    if (b == 2) return Result<ColoredCycle>::failure("no simple cycle of length 2");

    BIGraph big = build_big(s);
    std::vector<std::vector<int>> adj(b);
    for (const auto& [e, colors] : big.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed + 0xc1cULL + attempt));
        std::vector<int> order{static_cast<int>(rng() % b)};
        std::vector<char> used(b, 0);
        used[order[0]] = 1;
        long long nodes = 0;
        auto dfs = [&](auto&& self) -> bool {
            if (++nodes > nodes_per_restart) return false;
            if (static_cast<int>(order.size()) == b) {
                if (big.multiplicity(order.back(), order.front()) == 0) return false;
                return static_cast<bool>(infer_joins(s, order, require_colorful));
            }
            auto next = adj[order.back()];
            std::shuffle(next.begin(), next.end(), rng);
            for (int v : next) {
                if (used[v]) continue;
                used[v] = 1;
                order.push_back(v);
                if (self(self)) return true;
                order.pop_back();
                used[v] = 0;
            }
            return false;
        };
        if (dfs(dfs)) return infer_joins(s, order, require_colorful);
    }
    return Result<ColoredCycle>::failure("cycle search exhausted its budget");
}

}  // namespace ucover
