#include <catch2/catch_amalgamated.hpp>

#include "ucover/catalog.hpp"
#include "ucover/core.hpp"
#include "support/min_cover_oracle.hpp"

using namespace ucover;

namespace {

Fixture bundled(FixtureKind kind, int n, const GroupType& type = {}) {
    static Catalog cat("/tmp/ucover-test-cache-core");
    auto raw = cat.raw(kind, n, type);
    REQUIRE(raw.has_value());
    return *raw;
}

bool has_kind(const VerificationReport& r, ViolationKind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST_CASE("covering_number matches the closed form") {
    CHECK(covering_number(3) == 1);
    CHECK(covering_number(4) == 3);
    CHECK(covering_number(5) == 4);
    CHECK(covering_number(6) == 6);
    CHECK(covering_number(7) == 7);
    CHECK(covering_number(8) == 11);
    CHECK(covering_number(9) == 12);
    CHECK(covering_number(17) == 46);
    CHECK(covering_number(33) == 176);
    CHECK_THROWS_AS(covering_number(2), std::invalid_argument);
}

TEST_CASE("covering_number equals the exhaustive minimum for small orders") {
    for (int n = 3; n <= 7; ++n)
        CHECK(covering_number(n) == testsupport::min_cover_bruteforce(n));
}

TEST_CASE("verify_k_uniform") {
    SetSystem sts7 = bundled(FixtureKind::Sts, 7).system();
    CHECK(verify_k_uniform(sts7, {3}).valid());

    SetSystem bad{5, {{1, 2, 3}, {1, 2, 4, 5}}};
    auto r = verify_k_uniform(bad, {3});
    CHECK_FALSE(r.valid());
    CHECK(has_kind(r, ViolationKind::BadUniformity));

    SetSystem empty{4, {}};
    CHECK(verify_k_uniform(empty, {3}).valid());
}

TEST_CASE("verify_covering") {
    SetSystem sts7 = bundled(FixtureKind::Sts, 7).system();
    auto r = verify_covering(sts7);
    CHECK(r.valid());
    REQUIRE(r.minimum.has_value());
    CHECK(*r.minimum);

    SetSystem partial{4, {{1, 2, 3}, {1, 2, 4}}};
    auto bad = verify_covering(partial);
    CHECK_FALSE(bad.valid());
    REQUIRE(has_kind(bad, ViolationKind::UncoveredPair));
    bool found34 = false;
    for (const auto& v : bad.violations)
        if (v.kind == ViolationKind::UncoveredPair && v.points == std::vector<int>{3, 4})
            found34 = true;
    CHECK(found34);

    SetSystem cov8 = bundled(FixtureKind::Covering, 8).system();
    auto r8 = verify_covering(cov8);
    CHECK(r8.valid());
    CHECK(cov8.blocks.size() == 11);
    CHECK(*r8.minimum);
}

TEST_CASE("verify_pbd") {
    SetSystem sts9 = bundled(FixtureKind::Sts, 9).system();
    CHECK(verify_pbd(sts9, {3}).valid());

    SetSystem dup = bundled(FixtureKind::Sts, 7).system();
    dup.blocks.push_back(dup.blocks.front());
    auto r = verify_pbd(dup, {3});
    CHECK_FALSE(r.valid());
    CHECK(has_kind(r, ViolationKind::OverCoveredPair));
    CHECK(has_kind(r, ViolationKind::DuplicateBlock));

    // an (8,3,2)-covering cannot be a PBD: 11 blocks give 33 pair slots for 28 pairs
    SetSystem cov8 = bundled(FixtureKind::Covering, 8).system();
    CHECK(verify_covering(cov8).valid());
    CHECK_FALSE(verify_pbd(cov8, {3}).valid());
}

TEST_CASE("verify_gdd") {
    Fixture g33 = bundled(FixtureKind::Gdd3, 9, GroupType::parse("3^3"));
    auto r = verify_gdd(g33.grouped(), {3});
    CHECK(r.valid());
    CHECK(r.group_type == GroupType::parse("3^3"));

    GroupedDesign wrong{g33.system(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}};
    auto bad = verify_gdd(wrong, {3});
    CHECK_FALSE(bad.valid());
    CHECK(has_kind(bad, ViolationKind::BadGroupMeet));

    Fixture b1 = bundled(FixtureKind::Gdd4, 12, GroupType::parse("3^4"));
    CHECK(verify_gdd(b1.grouped(), {4}).valid());
}

TEST_CASE("gdd with singleton groups agrees with pbd") {
    SetSystem sts7 = bundled(FixtureKind::Sts, 7).system();
    GroupedDesign d{sts7, {}};
    for (int p = 1; p <= 7; ++p) d.groups.push_back({p});
    CHECK(verify_gdd(d, {3}).valid() == verify_pbd(sts7, {3}).valid());

    // and both reject the same invalid system
    SetSystem partial{4, {{1, 2, 3}}};
    GroupedDesign pd{partial, {{1}, {2}, {3}, {4}}};
    CHECK(verify_gdd(pd, {3}).valid() == verify_pbd(partial, {3}).valid());
}

TEST_CASE("pair counting bound holds for verified coverings") {
    for (int n : {4, 5, 6, 8, 16}) {
        SetSystem s = bundled(FixtureKind::Covering, n).system();
        REQUIRE(verify_covering(s).valid());
        CHECK(3 * static_cast<long long>(s.blocks.size()) >= 1LL * n * (n - 1) / 2);
    }
}

TEST_CASE("pbd implies minimum covering and admissible order") {
    for (int n : {7, 9, 13, 15}) {
        SetSystem s = bundled(FixtureKind::Sts, n).system();
        REQUIRE(verify_pbd(s, {3}).valid());
        auto cov = verify_covering(s);
        CHECK(cov.valid());
        CHECK(*cov.minimum);
        CHECK((n % 6 == 1 || n % 6 == 3));
    }
}

TEST_CASE("chr_feasible") {
    CHECK(chr_feasible(2, 3, 0));
    CHECK(chr_feasible(1, 7, 0));
    CHECK_FALSE(chr_feasible(2, 2, 1));  // t=2 requires u=g
    CHECK(chr_feasible(2, 2, 2));
    CHECK(chr_feasible(6, 3, 8));
    CHECK(chr_feasible(6, 3, 10));
    CHECK(chr_feasible(1, 6, 5));
    CHECK_FALSE(chr_feasible(3, 4, 0));   // parity of g(t-1)
    CHECK_FALSE(chr_feasible(2, 14, 0));  // pair count not divisible by 3
    CHECK_FALSE(chr_feasible(2, 3, 5));   // u > g(t-1)
}

TEST_CASE("bsh_feasible") {
    CHECK(bsh_feasible(3, 4));
    CHECK_FALSE(bsh_feasible(2, 4));  // exception
    CHECK_FALSE(bsh_feasible(6, 4));  // exception
    CHECK(bsh_feasible(3, 5));
    CHECK(bsh_feasible(3, 8));
    CHECK(bsh_feasible(3, 9));
    CHECK(bsh_feasible(3, 12));
    CHECK(bsh_feasible(2, 7));
    CHECK(bsh_feasible(6, 5));
    CHECK_FALSE(bsh_feasible(3, 6));
    CHECK_FALSE(bsh_feasible(5, 3));  // t >= 4 required
}

TEST_CASE("group type rendering") {
    CHECK(GroupType(std::vector<int>{6, 6, 6, 8}).render() == "6^3 8^1");
    CHECK(GroupType::parse("6^3,8^1").sizes() == std::vector<int>{6, 6, 6, 8});
    CHECK(GroupType::parse("1^6 3^1").total() == 9);
}
