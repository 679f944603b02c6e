#include <catch2/catch_amalgamated.hpp>

#include "ucover/catalog.hpp"
#include "ucover/ucycle.hpp"

using namespace ucover;

namespace {

Fixture bundled(FixtureKind kind, int n) {
    static Catalog cat("/tmp/ucover-test-cache-uc");
    auto raw = cat.raw(kind, n);
    REQUIRE(raw.has_value());
    return *raw;
}

// distinct order-7 triple system with the same pair representation; should
// NOT verify against the 2-shift cycle below
const SetSystem other_sts7{7, {{1, 3, 4}, {2, 3, 6}, {2, 4, 7}, {4, 5, 6},
                               {1, 6, 7}, {3, 5, 7}, {1, 2, 5}}};

ShiftUcycle u14() {
    ShiftUcycle u;
    u.seq = {1, 3, 7, 2, 6, 4, 3, 5, 2, 1, 4, 7, 5, 6};
    u.shift = 2;
    u.rank = 3;
    u.order = 7;
    return u;
}

}  // namespace

TEST_CASE("blocks_of extracts the fourteen-element cycle windows") {
    auto blocks = blocks_of(u14());
    REQUIRE(blocks.ok());
    std::vector<Block> expect = {{1, 3, 7}, {7, 2, 6}, {6, 4, 3}, {3, 5, 2},
                                 {2, 1, 4}, {4, 7, 5}, {5, 6, 1}};
    CHECK(*blocks == expect);
}

TEST_CASE("blocks_of with shift 1 rank 2 wraps") {
    ShiftUcycle u{{1, 2, 3}, 1, 2, 3, false};
    auto blocks = blocks_of(u);
    REQUIRE(blocks.ok());
    CHECK(*blocks == std::vector<Block>{{1, 2}, {2, 3}, {3, 1}});
}

TEST_CASE("blocks_of rejects a repeated point in a window") {
    ShiftUcycle u{{1, 1, 2, 3}, 2, 3, 3, false};
    auto blocks = blocks_of(u);
    CHECK_FALSE(blocks.ok());
    CHECK(blocks.error.find("i=0") != std::string::npos);
}

TEST_CASE("verify_shift_ucycle accepts the matching system and rejects the other") {
    // the window multiset must equal the bundled block set
    SetSystem sts7{7, {{1, 3, 7}, {1, 5, 6}, {4, 5, 7}, {2, 6, 7},
                       {3, 4, 6}, {1, 2, 4}, {2, 3, 5}}};
    CHECK(verify_shift_ucycle(u14(), sts7).valid());
    CHECK_FALSE(verify_shift_ucycle(u14(), other_sts7).valid());
}

TEST_CASE("verify_shift_ucycle flags duplicate windows") {
    ShiftUcycle u{{1, 2, 3, 1, 2, 3}, 2, 3, 3, false};
    SetSystem s{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
    auto r = verify_shift_ucycle(u, s);
    CHECK_FALSE(r.valid());
    bool dup = false;
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::DuplicateBlock) dup = true;
    CHECK(dup);
}

TEST_CASE("from_cah on the bundled order-7 system") {
    Fixture f = bundled(FixtureKind::Sts, 7);
    SetSystem s = f.system();
    auto cycle = fixture_cycle(f);
    REQUIRE(cycle.ok());
    ShiftUcycle u = from_cah(s, *cycle);
    CHECK(u.seq.size() == 14);
    CHECK(u.shift == 2);
    CHECK(verify_shift_ucycle(u, s).valid());
}

TEST_CASE("from_cah on the order-4 minimum covering") {
    Fixture f = bundled(FixtureKind::Covering, 4);
    SetSystem s = f.system();
    auto cycle = infer_joins(s, {0, 1, 2});
    REQUIRE(cycle.ok());
    ShiftUcycle u = from_cah(s, *cycle);
    CHECK(u.seq.size() == 6);
    CHECK(verify_shift_ucycle(u, s).valid());
    CHECK(u.seq == std::vector<int>{3, 2, 1, 2, 4, 1});
}

TEST_CASE("from_cah degenerate single block") {
    SetSystem s{3, {{2, 1, 3}}};
    ShiftUcycle u = from_cah(s, ColoredCycle{{0}, {}});
    CHECK(u.degenerate);
    CHECK(u.seq == std::vector<int>{1, 2, 3});
    CHECK(verify_shift_ucycle(u, s).valid());
}

TEST_CASE("to_cah recovers order and joins") {
    SetSystem sts7{7, {{1, 3, 7}, {1, 5, 6}, {4, 5, 7}, {2, 6, 7},
                       {3, 4, 6}, {1, 2, 4}, {2, 3, 5}}};
    ColoredCycle c = to_cah(u14(), sts7);
    CHECK(c.joins == std::vector<int>{7, 6, 3, 2, 4, 5, 1});
    CHECK(verify_cah(sts7, c, false).valid());

    CHECK_THROWS_AS(to_cah(u14(), other_sts7), std::invalid_argument);
}

TEST_CASE("round trip through from_cah and to_cah is the identity") {
    for (int n : {7, 9, 13, 15}) {
        Fixture f = bundled(FixtureKind::Sts, n);
        SetSystem s = f.system();
        auto cycle = fixture_cycle(f);
        REQUIRE(cycle.ok());
        ShiftUcycle u = from_cah(s, *cycle);
        REQUIRE(verify_shift_ucycle(u, s).valid());
        ColoredCycle back = to_cah(u, s);
        CHECK(back.block_ids == cycle->block_ids);
        CHECK(back.joins == cycle->joins);
    }
}

TEST_CASE("window overlap equals the join color") {
    Fixture f = bundled(FixtureKind::Sts, 9);
    SetSystem s = f.system();
    auto cycle = fixture_cycle(f);
    REQUIRE(cycle.ok());
    ShiftUcycle u = from_cah(s, *cycle);
    auto windows = blocks_of(u);
    REQUIRE(windows.ok());
    const int m = static_cast<int>(windows->size());
    for (int i = 0; i < m; ++i) {
        auto shared = block_intersection((*windows)[i], (*windows)[(i + 1) % m]);
        REQUIRE(shared.size() == 1);
        CHECK(shared[0] == cycle->joins[i]);
        CHECK(u.seq[2 * i] != u.seq[(2 * (i + 1)) % u.seq.size()]);
    }
}

TEST_CASE("ucycle text round trip") {
    ShiftUcycle u = u14();
    std::string line = render_ucycle(u);
    CHECK(line == "ucycle s=2 k=3 n=7: 1 3 7 2 6 4 3 5 2 1 4 7 5 6");
    auto parsed = parse_ucycle(line);
    REQUIRE(parsed.ok());
    CHECK(parsed->seq == u.seq);
    CHECK(parsed->shift == 2);
    CHECK(parsed->rank == 3);
    CHECK(parsed->order == 7);
}
