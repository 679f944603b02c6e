#pragma once

// Set systems, group divisible designs, and their exact verifiers.
//
// Points are 1-based: a system of order n lives on {1,...,n}. Blocks keep
// the point order they were given in (cycle listings are order-sensitive);
// verifiers treat them as sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucover {

using Block = std::vector<int>;
using Group = std::vector<int>;

struct SetSystem {
    int order = 0;
    std::vector<Block> blocks;
};

inline Block sorted_block(const Block& b) {
    Block s = b;
    std::sort(s.begin(), s.end());
    return s;
}

// Multiset of group sizes. Rendered in exponent notation, e.g. "3^5 6^1".
class GroupType {
public:
    GroupType() = default;
    explicit GroupType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        std::sort(sizes_.begin(), sizes_.end());
    }

    const std::vector<int>& sizes() const { return sizes_; }
    bool empty() const { return sizes_.empty(); }
    int total() const {
        int s = 0;
        for (int g : sizes_) s += g;
        return s;
    }

    std::string render(char sep = ' ') const {
        std::string out;
        for (std::size_t i = 0; i < sizes_.size();) {
            std::size_t j = i;
            while (j < sizes_.size() && sizes_[j] == sizes_[i]) ++j;
            if (!out.empty()) out += sep;
            out += std::to_string(sizes_[i]) + '^' + std::to_string(j - i);
            i = j;
        }
        return out;
    }

    // Accepts "6^3 8^1", "6^3,8^1" or a bare size list like "6 6 6 8".
    static GroupType parse(const std::string& text) {
        std::vector<int> sizes;
        std::string tok;
        std::istringstream in(text);
        std::string norm = text;
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream is(norm);
        while (is >> tok) {
            auto caret = tok.find('^');
            if (caret == std::string::npos) {
                sizes.push_back(std::stoi(tok));
            } else {
                int g = std::stoi(tok.substr(0, caret));
                int t = std::stoi(tok.substr(caret + 1));
                for (int i = 0; i < t; ++i) sizes.push_back(g);
            }
        }
        return GroupType(sizes);
    }

    friend bool operator==(const GroupType&, const GroupType&) = default;
    friend auto operator<=>(const GroupType& a, const GroupType& b) {
        return a.sizes_ <=> b.sizes_;
    }

private:
    std::vector<int> sizes_;
};

struct GroupedDesign {
    SetSystem system;
    std::vector<Group> groups;

    GroupType type() const {
        std::vector<int> sizes;
        sizes.reserve(groups.size());
        for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
        return GroupType(std::move(sizes));
    }
};

enum class ViolationKind {
    UncoveredPair,
    OverCoveredPair,
    BadUniformity,
    BadGroupMeet,
    DuplicateBlock,
    OutOfRange,
    WrongSize,
    // cycle and window certificates
    BadJoin,
    NotAlternating,
    NotHamiltonian,
    NotColorful,
    MalformedWindow,
    WrongBlock,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::UncoveredPair: return "uncovered-pair";
        case ViolationKind::OverCoveredPair: return "over-covered-pair";
        case ViolationKind::BadUniformity: return "bad-uniformity";
        case ViolationKind::BadGroupMeet: return "bad-group-meet";
        case ViolationKind::DuplicateBlock: return "duplicate-block";
        case ViolationKind::OutOfRange: return "out-of-range";
        case ViolationKind::WrongSize: return "wrong-size";
        case ViolationKind::BadJoin: return "bad-join";
        case ViolationKind::NotAlternating: return "not-alternating";
        case ViolationKind::NotHamiltonian: return "not-hamiltonian";
        case ViolationKind::NotColorful: return "not-colorful";
        case ViolationKind::MalformedWindow: return "malformed-window";
        case ViolationKind::WrongBlock: return "wrong-block";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
    std::vector<int> points;  // witness points, if any
    std::vector<int> blocks;  // witness block indices, if any
};

struct VerificationReport {
    std::vector<Violation> violations;
    std::optional<bool> minimum;  // covering verification: |blocks| == C(n,3,2)
    GroupType group_type;         // GDD verification: computed type

    bool valid() const { return violations.empty(); }

    void add(ViolationKind kind, std::string detail, std::vector<int> points = {},
             std::vector<int> blocks = {}) {
        violations.push_back({kind, std::move(detail), std::move(points), std::move(blocks)});
    }

    std::string summary() const {
        if (valid()) return "valid";
        std::ostringstream out;
        out << violations.size() << " violation(s):";
        for (const auto& v : violations) out << "\n  [" << to_string(v.kind) << "] " << v.detail;
        return out.str();
    }
};

// C(n,3,2) = ceil( n/3 * ceil((n-1)/2) ), computed in integer arithmetic.
inline long long covering_number(long long n) {
    if (n < 3) throw std::invalid_argument("covering_number: order must be >= 3");
    long long inner = n / 2;  // == ceil((n-1)/2)
    return (n * inner + 2) / 3;
}

namespace detail {

// Multiplicity of every unordered point pair over the block list, plus the
// structural checks (range, repeats, duplicates) every verifier needs.
struct PairTable {
    int n = 0;
    std::vector<int> mult;  // row-major upper triangle

    explicit PairTable(int order) : n(order), mult(static_cast<std::size_t>(order) * order, 0) {}

    int& at(int x, int y) {
        if (x > y) std::swap(x, y);
        return mult[static_cast<std::size_t>(x - 1) * n + (y - 1)];
    }
    int get(int x, int y) const {
        if (x > y) std::swap(x, y);
        return mult[static_cast<std::size_t>(x - 1) * n + (y - 1)];
    }
};

// Runs range/repeat/duplicate checks, filling `table` from structurally sound
// blocks. Returns indices of blocks that passed the structural checks.
inline std::vector<int> scan_blocks(const SetSystem& s, VerificationReport& report,
                                    PairTable& table) {
    std::vector<int> ok;
    std::map<Block, int> seen;
    for (int bi = 0; bi < static_cast<int>(s.blocks.size()); ++bi) {
        const Block& b = s.blocks[bi];
        bool sound = true;
        for (int p : b) {
            if (p < 1 || p > s.order) {
                report.add(ViolationKind::OutOfRange,
                           "block " + std::to_string(bi) + " references point " +
                               std::to_string(p) + " outside 1.." + std::to_string(s.order),
                           {p}, {bi});
                sound = false;
            }
        }
        Block key = sorted_block(b);
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
            report.add(ViolationKind::DuplicateBlock,
                       "block " + std::to_string(bi) + " repeats a point", {}, {bi});
            sound = false;
        }
        if (!sound) continue;
        auto [it, inserted] = seen.emplace(key, bi);
        if (!inserted)
            report.add(ViolationKind::DuplicateBlock,
                       "blocks " + std::to_string(it->second) + " and " + std::to_string(bi) +
                           " are equal",
                       {}, {it->second, bi});
        ok.push_back(bi);
        for (std::size_t i = 0; i < key.size(); ++i)
            for (std::size_t j = i + 1; j < key.size(); ++j) ++table.at(key[i], key[j]);
    }
    return ok;
}

}  // namespace detail

inline VerificationReport verify_k_uniform(const SetSystem& s, const std::set<int>& K) {
    VerificationReport report;
    for (int bi = 0; bi < static_cast<int>(s.blocks.size()); ++bi) {
        int size = static_cast<int>(s.blocks[bi].size());
        if (!K.contains(size))
            report.add(ViolationKind::BadUniformity,
                       "block " + std::to_string(bi) + " has size " + std::to_string(size),
                       {}, {bi});
    }
    return report;
}

// Valid iff s is a 3-uniform system covering every point pair at least once.
// `minimum` reports whether the block count meets C(n,3,2).
inline VerificationReport verify_covering(const SetSystem& s) {
    VerificationReport report = verify_k_uniform(s, {3});
    detail::PairTable table(s.order);
    detail::scan_blocks(s, report, table);
    for (int x = 1; x <= s.order; ++x)
        for (int y = x + 1; y <= s.order; ++y)
            if (table.get(x, y) == 0)
                report.add(ViolationKind::UncoveredPair,
                           "pair {" + std::to_string(x) + "," + std::to_string(y) +
                               "} is in no block",
                           {x, y});
    if (s.order >= 3)
        report.minimum =
            static_cast<long long>(s.blocks.size()) == covering_number(s.order);
    return report;
}

inline VerificationReport verify_pbd(const SetSystem& s, const std::set<int>& K) {
    VerificationReport report = verify_k_uniform(s, K);
    detail::PairTable table(s.order);
    detail::scan_blocks(s, report, table);
    for (int x = 1; x <= s.order; ++x)
        for (int y = x + 1; y <= s.order; ++y) {
            int m = table.get(x, y);
            if (m == 0)
                report.add(ViolationKind::UncoveredPair,
                           "pair {" + std::to_string(x) + "," + std::to_string(y) +
                               "} is in no block",
                           {x, y});
            else if (m > 1)
                report.add(ViolationKind::OverCoveredPair,
                           "pair {" + std::to_string(x) + "," + std::to_string(y) +
                               "} is in " + std::to_string(m) + " blocks",
                           {x, y});
        }
    return report;
}

// GDD validity: K-uniform; groups partition the point set; every block meets
// each group in at most one point; cross-group pairs covered exactly once and
// within-group pairs never.
inline VerificationReport verify_gdd(const GroupedDesign& d, const std::set<int>& K) {
    const SetSystem& s = d.system;
    VerificationReport report = verify_k_uniform(s, K);
    report.group_type = d.type();

    std::vector<int> group_of(s.order + 1, 0);
    for (int gi = 0; gi < static_cast<int>(d.groups.size()); ++gi)
        for (int p : d.groups[gi]) {
            if (p < 1 || p > s.order) {
                report.add(ViolationKind::OutOfRange,
                           "group " + std::to_string(gi) + " references point " +
                               std::to_string(p),
                           {p});
                continue;
            }
            if (group_of[p] != 0)
                report.add(ViolationKind::BadGroupMeet,
                           "point " + std::to_string(p) + " lies in two groups", {p});
            group_of[p] = gi + 1;
        }
    for (int p = 1; p <= s.order; ++p)
        if (group_of[p] == 0)
            report.add(ViolationKind::BadGroupMeet,
                       "point " + std::to_string(p) + " lies in no group", {p});

    detail::PairTable table(s.order);
    std::vector<int> ok = detail::scan_blocks(s, report, table);
    for (int bi : ok) {
        std::map<int, int> meets;
        for (int p : s.blocks[bi])
            if (group_of[p] != 0 && ++meets[group_of[p]] == 2)
                report.add(ViolationKind::BadGroupMeet,
                           "block " + std::to_string(bi) + " meets group " +
                               std::to_string(group_of[p] - 1) + " twice",
                           {p}, {bi});
    }
    for (int x = 1; x <= s.order; ++x)
        for (int y = x + 1; y <= s.order; ++y) {
            int m = table.get(x, y);
            bool same_group = group_of[x] != 0 && group_of[x] == group_of[y];
            if (same_group && m > 0)
                report.add(ViolationKind::OverCoveredPair,
                           "within-group pair {" + std::to_string(x) + "," +
                               std::to_string(y) + "} is in " + std::to_string(m) + " blocks",
                           {x, y});
            if (!same_group && m != 1)
                report.add(m == 0 ? ViolationKind::UncoveredPair : ViolationKind::OverCoveredPair,
                           "cross pair {" + std::to_string(x) + "," + std::to_string(y) +
                               "} is in " + std::to_string(m) + " blocks",
                           {x, y});
        }
    return report;
}

// Existence of a {3}-GDD of type g^t u^1 (five necessary-and-sufficient
// conditions).
inline bool chr_feasible(long long g, long long t, long long u) {
    if (g < 0 || t < 0 || u < 0) return false;
    if (g > 0 && !(t >= 3 || (t == 2 && u == g) || (t == 1 && u == 0) || t == 0)) return false;
    if (g * t != 0 && u > g * (t - 1)) return false;
    if (g * t != 0 && (g * (t - 1) + u) % 2 != 0) return false;
    if (u != 0 && (g * t) % 2 != 0) return false;
    if ((g * g * (t * (t - 1) / 2) + g * t * u) % 3 != 0) return false;
    return true;
}

// Existence of a {4}-GDD of type g^t.
inline bool bsh_feasible(long long g, long long t) {
    if (g <= 0 || t < 4) return false;
    if ((g == 2 && t == 4) || (g == 6 && t == 4)) return false;
    long long gm = g % 6, tm12 = t % 12;
    if ((gm == 1 || gm == 5) && (tm12 == 1 || tm12 == 4)) return true;
    if ((gm == 2 || gm == 4) && t % 3 == 1) return true;
    if (gm == 3 && (t % 4 == 0 || t % 4 == 1)) return true;
    if (gm == 0) return true;
    return false;
}

}  // namespace ucover
