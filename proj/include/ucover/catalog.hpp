#pragma once

// Bundled design catalog: fixture text format, verify-on-load checks, repair
// of under-full covering listings, and a persistent cache for
// search-produced designs.
//
// Fixture format (line oriented, UTF-8, '#' comments):
//   fixture kind=<sts|covering|gdd3|gdd4|gdd47> n=<n> [type=<exp>] [K=<sizes>]
//           [cah=<colorful|alternating|none>] [provenance=<bundled|repaired|searched>]
//           [seed=<u64>]
//   group: p1 p2 ...
//   block: p1 p2 p3 [!bold] [!italic]
//   join: c
// Blocks are listed in cycle order for kinds that carry a cycle certificate.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "ucover/catalog_data.hpp"
#include "ucover/core.hpp"
#include "ucover/cycle_graph.hpp"
#include "ucover/result.hpp"
#include "ucover/search.hpp"

namespace ucover {

enum class FixtureKind { Sts, Covering, Gdd3, Gdd4, Gdd47 };
enum class CahClaim { None, Alternating, Colorful };
enum class Provenance { Bundled, Repaired, Searched };

inline const char* to_string(FixtureKind k) {
    switch (k) {
        case FixtureKind::Sts: return "sts";
        case FixtureKind::Covering: return "covering";
        case FixtureKind::Gdd3: return "gdd3";
        case FixtureKind::Gdd4: return "gdd4";
        case FixtureKind::Gdd47: return "gdd47";
    }
    return "?";
}
inline const char* to_string(CahClaim c) {
    switch (c) {
        case CahClaim::None: return "none";
        case CahClaim::Alternating: return "alternating";
        case CahClaim::Colorful: return "colorful";
    }
    return "?";
}
inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Bundled: return "bundled";
        case Provenance::Repaired: return "repaired";
        case Provenance::Searched: return "searched";
    }
    return "?";
}

struct Fixture {
    FixtureKind kind = FixtureKind::Sts;
    int order = 0;
    GroupType type;  // empty for sts/covering
    CahClaim claim = CahClaim::None;
    Provenance provenance = Provenance::Bundled;
    std::uint64_t seed = 0;
    std::vector<Group> groups;
    std::vector<Block> blocks;        // cycle order where applicable
    std::vector<std::uint8_t> marks;  // per block; bit 0 = bold, bit 1 = italic
    std::vector<int> joins;           // optional pinned joins

    std::set<int> block_sizes() const {
        switch (kind) {
            case FixtureKind::Gdd4: return {4};
            case FixtureKind::Gdd47: return {4, 7};
            default: return {3};
        }
    }
    SetSystem system() const { return SetSystem{order, blocks}; }
    GroupedDesign grouped() const { return GroupedDesign{system(), groups}; }
};

inline CahClaim default_claim(FixtureKind k) {
    switch (k) {
        case FixtureKind::Sts:
        case FixtureKind::Covering:
        case FixtureKind::Gdd3: return CahClaim::Colorful;
        default: return CahClaim::None;
    }
}

inline Result<Fixture> load_fixture(const std::string& text) {
    Fixture f;
    bool have_header = false, have_claim = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        return Result<Fixture>::failure("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "fixture") {
            have_header = true;
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) return fail("expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "kind") {
                    if (val == "sts") f.kind = FixtureKind::Sts;
                    else if (val == "covering") f.kind = FixtureKind::Covering;
                    else if (val == "gdd3") f.kind = FixtureKind::Gdd3;
                    else if (val == "gdd4") f.kind = FixtureKind::Gdd4;
                    else if (val == "gdd47") f.kind = FixtureKind::Gdd47;
                    else return fail("unknown kind '" + val + "'");
                } else if (key == "n") {
                    f.order = std::stoi(val);
                } else if (key == "type") {
                    f.type = GroupType::parse(val);
                } else if (key == "K") {
                    // informative; sizes are implied by kind
                } else if (key == "cah") {
                    have_claim = true;
                    if (val == "none") f.claim = CahClaim::None;
                    else if (val == "alternating") f.claim = CahClaim::Alternating;
                    else if (val == "colorful") f.claim = CahClaim::Colorful;
                    else return fail("unknown cah claim '" + val + "'");
                } else if (key == "provenance") {
                    if (val == "bundled") f.provenance = Provenance::Bundled;
                    else if (val == "repaired") f.provenance = Provenance::Repaired;
                    else if (val == "searched") f.provenance = Provenance::Searched;
                    else return fail("unknown provenance '" + val + "'");
                } else if (key == "seed") {
                    f.seed = std::stoull(val);
                } else {
                    return fail("unknown key '" + key + "'");
                }
            }
        } else if (head == "group:") {
            Group g;
            int p;
            while (ls >> p) g.push_back(p);
            if (g.empty()) return fail("empty group");
            f.groups.push_back(std::move(g));
        } else if (head == "block:") {
            Block b;
            std::uint8_t mark = 0;
            std::string tok;
            while (ls >> tok) {
                if (tok == "!bold") mark |= 1;
                else if (tok == "!italic") mark |= 2;
                else {
                    try {
                        b.push_back(std::stoi(tok));
                    } catch (...) {
                        return fail("bad point '" + tok + "'");
                    }
                }
            }
            if (b.empty()) return fail("empty block");
            f.blocks.push_back(std::move(b));
            f.marks.push_back(mark);
        } else if (head == "join:") {
            int c;
            if (!(ls >> c)) return fail("join line without color");
            f.joins.push_back(c);
        } else {
            return fail("unknown directive '" + head + "'");
        }
    }
    if (!have_header) return Result<Fixture>::failure("missing fixture header");
    if (!have_claim) f.claim = default_claim(f.kind);
    return Result<Fixture>::success(std::move(f));
}

inline std::string store_fixture(const Fixture& f) {
    std::ostringstream out;
    out << "fixture kind=" << to_string(f.kind) << " n=" << f.order;
    if (!f.type.empty()) out << " type=" << f.type.render(',');
    if (f.claim != default_claim(f.kind)) out << " cah=" << to_string(f.claim);
    out << " provenance=" << to_string(f.provenance);
    if (f.provenance != Provenance::Bundled) out << " seed=" << f.seed;
    out << '\n';
    for (const auto& g : f.groups) {
        out << "group:";
        for (int p : g) out << ' ' << p;
        out << '\n';
    }
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        out << "block:";
        for (int p : f.blocks[i]) out << ' ' << p;
        if (i < f.marks.size() && (f.marks[i] & 1)) out << " !bold";
        if (i < f.marks.size() && (f.marks[i] & 2)) out << " !italic";
        out << '\n';
    }
    for (int c : f.joins) out << "join: " << c << '\n';
    return out.str();
}

// Derives the fixture's cycle certificate: pinned joins if present, otherwise
// deterministic inference over the listed block order.
inline Result<ColoredCycle> fixture_cycle(const Fixture& f) {
    if (f.claim == CahClaim::None) return Result<ColoredCycle>::failure("fixture carries no cycle");
    SetSystem s = f.system();
    if (!f.joins.empty()) {
        ColoredCycle c;
        c.block_ids.resize(f.blocks.size());
        for (std::size_t i = 0; i < f.blocks.size(); ++i) c.block_ids[i] = static_cast<int>(i);
        c.joins = f.joins;
        auto rep = verify_cah(s, c, f.claim == CahClaim::Colorful);
        if (!rep.valid()) return Result<ColoredCycle>::failure("pinned joins invalid: " + rep.summary());
        return Result<ColoredCycle>::success(std::move(c));
    }
    std::vector<int> order(f.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return infer_joins(s, order, f.claim == CahClaim::Colorful);
}

// Full verification per kind: design validity, declared type, minimality for
// coverings, and the claimed cycle certificate.
inline VerificationReport check(const Fixture& f) {
    VerificationReport report;
    SetSystem s = f.system();
    switch (f.kind) {
        case FixtureKind::Sts:
            report = verify_pbd(s, {3});
            break;
        case FixtureKind::Covering: {
            report = verify_covering(s);
            if (report.minimum.has_value() && !*report.minimum)
                report.add(ViolationKind::WrongSize,
                           "covering has " + std::to_string(s.blocks.size()) + " blocks, C(" +
                               std::to_string(s.order) + ",3,2) = " +
                               std::to_string(covering_number(s.order)));
            break;
        }
        case FixtureKind::Gdd3:
        case FixtureKind::Gdd4:
        case FixtureKind::Gdd47: {
            report = verify_gdd(f.grouped(), f.block_sizes());
            if (!f.type.empty() && report.group_type != f.type)
                report.add(ViolationKind::WrongSize,
                           "declared type " + f.type.render() + " but groups give " +
                               report.group_type.render());
            break;
        }
    }
    if (f.claim != CahClaim::None) {
        auto cycle = fixture_cycle(f);
        if (!cycle)
            report.add(f.claim == CahClaim::Colorful ? ViolationKind::NotColorful
                                                     : ViolationKind::NotAlternating,
                       "cycle certificate: " + cycle.error);
    }
    return report;
}

namespace detail {

// Completion step of covering repair: adds blocks (optionally after dropping
// a redundant one) so the result has exactly `target` blocks and full pair
// coverage. Pure addition first; a listing with one corrupted block needs a
// drop before the uncovered pairs fit in the remaining room.
inline Result<std::vector<Block>> complete_or_swap(const SetSystem& s, long long target) {
    auto added = complete_covering(s, target);
    if (added) return Result<std::vector<Block>>::success(std::move(*added));
    for (std::size_t drop = 0; drop < s.blocks.size(); ++drop) {
        SetSystem reduced{s.order, {}};
        for (std::size_t i = 0; i < s.blocks.size(); ++i)
            if (i != drop) reduced.blocks.push_back(s.blocks[i]);
        auto r = complete_covering(reduced, target);
        if (r) {
            std::vector<Block> blocks = reduced.blocks;
            blocks.insert(blocks.end(), r->begin(), r->end());
            return Result<std::vector<Block>>::success(std::move(blocks));
        }
    }
    return Result<std::vector<Block>>::failure(added.error +
                                               " (with and without dropping one block)");
}

}  // namespace detail

// Completes an under-full covering fixture to C(n,3,2) blocks and re-stitches
// its cycle: insertion points for the added blocks are scanned first, and a
// full cycle search takes over when no insertion satisfies the fixture's
// claim. Deterministic for a fixed seed, which is recorded in the result.
inline Result<Fixture> repair(const Fixture& f, std::uint64_t seed = 1) {
    auto pre = check(f);
    if (pre.valid()) return Result<Fixture>::success(f);
    for (const auto& v : pre.violations) {
        bool repairable = v.kind == ViolationKind::UncoveredPair ||
                          v.kind == ViolationKind::WrongSize ||
                          v.kind == ViolationKind::NotColorful ||
                          v.kind == ViolationKind::NotAlternating;
        if (!repairable)
            throw std::invalid_argument(std::string("repair: fixture structure is broken (") +
                                        to_string(v.kind) + ": " + v.detail + ")");
    }
    if (f.kind != FixtureKind::Covering)
        throw std::invalid_argument("repair: only covering fixtures are repairable");

    SetSystem s = f.system();
    const long long target = covering_number(s.order);

    auto completed = detail::complete_or_swap(s, target);
    if (!completed) return Result<Fixture>::failure("completion failed: " + completed.error);

    const bool colorful = f.claim == CahClaim::Colorful;
    Fixture out = f;
    out.provenance = Provenance::Repaired;
    out.seed = seed;

    // base = surviving blocks in their listed order; inserted = new blocks
    std::vector<Block> inserted = *completed;
    std::vector<Block> base;
    for (const Block& b : f.blocks) {
        auto it = std::find(inserted.begin(), inserted.end(), b);
        if (it != inserted.end()) {
            base.push_back(*it);
            inserted.erase(it);
        }
    }

    std::vector<Block> best;
    auto try_positions = [&](auto&& self, std::size_t idx, std::vector<Block> current) -> bool {
        if (idx == inserted.size()) {
            SetSystem candidate{f.order, current};
            std::vector<int> order(current.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            if (infer_joins(candidate, order, colorful)) {
                best = std::move(current);
                return true;
            }
            return false;
        }
        for (std::size_t pos = 0; pos <= current.size(); ++pos) {
            std::vector<Block> next = current;
            next.insert(next.begin() + pos, inserted[idx]);
            if (self(self, idx + 1, std::move(next))) return true;
        }
        return false;
    };
    if (try_positions(try_positions, 0, base)) {
        out.blocks = std::move(best);
    } else {
        // no insertion point preserves the claim; search a fresh cycle order
        SetSystem candidate{f.order, *completed};
        auto cycle = search_cah_cycle(candidate, colorful, seed);
        if (!cycle)
            return Result<Fixture>::failure("no cycle order found for the completed design: " +
                                            cycle.error);
        out.blocks.clear();
        for (int id : cycle->block_ids) out.blocks.push_back(candidate.blocks[id]);
        out.joins = cycle->joins;
    }
    out.marks.assign(out.blocks.size(), 0);
    auto post = check(out);
    if (!post.valid())
        return Result<Fixture>::failure("repaired fixture fails verification: " + post.summary());
    return Result<Fixture>::success(std::move(out));
}

// Keyed access to the bundled fixtures plus a persistent single-writer cache
// for searched designs. Every returned fixture has passed check().
class Catalog {
public:
    static std::string key_of(FixtureKind kind, int n, const GroupType& type) {
        std::string k = to_string(kind);
        if (type.empty()) return k + "_n" + std::to_string(n);
        return k + "_" + type.render(',');
    }

    explicit Catalog(std::optional<std::filesystem::path> cache_dir = std::nullopt) {
        if (cache_dir) {
            cache_dir_ = *cache_dir;
        } else if (const char* env = std::getenv("UCOVER_CACHE_DIR")) {
            cache_dir_ = env;
        } else {
            cache_dir_ = ".ucover-cache";
        }
        for (std::string_view text : catalog_data::all) {
            auto f = load_fixture(std::string(text));
            Fixture fx = f.expect("bundled fixture failed to parse");
            bundled_.emplace(key_of(fx.kind, fx.order, fx.type), std::move(fx));
        }
    }

    const std::filesystem::path& cache_dir() const { return cache_dir_; }

    std::vector<std::string> bundled_keys() const {
        std::vector<std::string> keys;
        for (const auto& [k, _] : bundled_) keys.push_back(k);
        return keys;
    }

    // Raw bundled fixture, unrepaired (for inspection and the repair op).
    std::optional<Fixture> raw(FixtureKind kind, int n, const GroupType& type = {}) const {
        auto it = bundled_.find(key_of(kind, n, type));
        if (it == bundled_.end()) return std::nullopt;
        return it->second;
    }

    // Verified fixture: bundled (repaired on demand, memoized), else cache.
    Result<Fixture> get(FixtureKind kind, int n, const GroupType& type = {}) {
        const std::string key = key_of(kind, n, type);
        if (auto it = verified_.find(key); it != verified_.end())
            return Result<Fixture>::success(it->second);
        if (auto it = bundled_.find(key); it != bundled_.end()) {
            Fixture fx = it->second;
            if (!check(fx).valid()) {
                auto repaired = repair(fx, repair_seed);
                if (!repaired) return Result<Fixture>::failure(repaired.error);
                fx = std::move(*repaired);
            }
            verified_.emplace(key, fx);
            return Result<Fixture>::success(std::move(fx));
        }
        if (auto cached = read_cache(key)) {
            if (check(*cached).valid()) {
                verified_.emplace(key, *cached);
                return Result<Fixture>::success(std::move(*cached));
            }
        }
        return Result<Fixture>::failure("not-available: " + key);
    }

    // Stores a searched fixture in the persistent cache (advisory lock).
    void put(const Fixture& f) {
        const std::string key = key_of(f.kind, f.order, f.type);
        verified_.insert_or_assign(key, f);
        std::error_code ec;
        std::filesystem::create_directories(cache_dir_, ec);
        if (ec) return;
        int lock_fd = ::open((cache_dir_ / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
        if (lock_fd >= 0) ::flock(lock_fd, LOCK_EX);
        {
            std::ofstream out(cache_dir_ / (key + ".fix"), std::ios::binary | std::ios::trunc);
            out << store_fixture(f);
        }
        if (lock_fd >= 0) {
            ::flock(lock_fd, LOCK_UN);
            ::close(lock_fd);
        }
    }

    std::uint64_t repair_seed = 1;

private:
    std::optional<Fixture> read_cache(const std::string& key) const {
        std::ifstream in(cache_dir_ / (key + ".fix"), std::ios::binary);
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        auto f = load_fixture(buf.str());
        if (!f) return std::nullopt;
        return *f;
    }

    std::filesystem::path cache_dir_;
    std::map<std::string, Fixture> bundled_;
    std::map<std::string, Fixture> verified_;
};

}  // namespace ucover
