#pragma once

// Bundled design catalog: raw fixture texts, loaded by catalog.hpp.

#include <string_view>
#include <array>

namespace ucover::catalog_data {

inline constexpr std::string_view sts_3 = R"catalog(fixture kind=sts n=3 provenance=bundled
block: 1 2 3
)catalog";

inline constexpr std::string_view sts_7 = R"catalog(fixture kind=sts n=7 provenance=bundled
block: 5 3 1
block: 1 7 4
block: 4 2 3
block: 3 6 7
block: 7 5 2
block: 2 1 6
block: 6 4 5
)catalog";

inline constexpr std::string_view sts_9 = R"catalog(fixture kind=sts n=9 provenance=bundled
block: 3 6 9
block: 9 5 1
block: 1 6 8
block: 8 7 9
block: 9 4 2
block: 2 8 5
block: 5 3 7
block: 7 4 1
block: 1 3 2
block: 2 7 6
block: 6 5 4
block: 4 8 3
)catalog";

inline constexpr std::string_view sts_13 = R"catalog(fixture kind=sts n=13 provenance=bundled
block: 5 10 3
block: 3 13 12
block: 12 7 5
block: 5 8 4
block: 4 11 6
block: 6 2 3
block: 3 8 1
block: 1 7 9
block: 9 6 5
block: 5 1 2
block: 2 10 8
block: 8 12 9
block: 9 2 4
block: 4 12 10
block: 10 6 7
block: 7 8 11
block: 11 3 9
block: 9 13 10
block: 10 1 11
block: 11 12 2
block: 2 13 7
block: 7 3 4
block: 4 13 1
block: 1 12 6
block: 6 8 13
block: 13 11 5
)catalog";

inline constexpr std::string_view sts_15 = R"catalog(fixture kind=sts n=15 provenance=bundled
block: 7 11 1
block: 1 10 5
block: 5 6 15
block: 15 8 11
block: 11 2 4
block: 4 13 8
block: 8 14 1
block: 1 9 12
block: 12 6 11
block: 11 5 13
block: 13 14 12
block: 12 4 15
block: 15 1 2
block: 2 3 12
block: 12 7 10
block: 10 11 9
block: 9 13 6
block: 6 7 8
block: 8 10 2
block: 2 14 6
block: 6 4 1
block: 1 13 3
block: 3 11 14
block: 14 15 9
block: 9 7 4
block: 4 10 14
block: 14 5 7
block: 7 3 15
block: 15 13 10
block: 10 6 3
block: 3 4 5
block: 5 12 8
block: 8 3 9
block: 9 5 2
block: 2 13 7
)catalog";

inline constexpr std::string_view covering_4 = R"catalog(fixture kind=covering n=4 cah=alternating provenance=bundled
block: 3 1 2
block: 2 4 1
block: 1 4 3
)catalog";

inline constexpr std::string_view covering_5 = R"catalog(fixture kind=covering n=5 cah=alternating provenance=bundled
block: 1 2 3
block: 3 4 5
block: 5 2 4
block: 4 5 1
)catalog";

inline constexpr std::string_view covering_6 = R"catalog(fixture kind=covering n=6 cah=colorful provenance=bundled
block: 6 3 1
block: 1 4 2
block: 2 5 3
block: 3 6 4
block: 4 1 5
block: 5 2 6
)catalog";

inline constexpr std::string_view covering_8 = R"catalog(fixture kind=covering n=8 cah=colorful provenance=bundled
block: 3 8 1
block: 1 4 2
block: 2 5 3
block: 3 6 4
block: 4 8 5
block: 5 1 6
block: 6 2 8
block: 8 1 7
block: 7 4 5
block: 5 6 7
block: 7 2 3
)catalog";

inline constexpr std::string_view covering_10 = R"catalog(fixture kind=covering n=10 cah=colorful provenance=bundled
block: 7 9 8
block: 8 4 3
block: 3 6 9
block: 9 10 8
block: 8 6 1
block: 1 10 2
block: 2 8 5
block: 5 1 9
block: 9 2 4
block: 4 1 7
block: 7 8 10
block: 10 4 3
block: 3 1 2
block: 2 7 6
block: 6 10 5
block: 5 3 7
)catalog";

inline constexpr std::string_view covering_11 = R"catalog(fixture kind=covering n=11 cah=colorful provenance=bundled
block: 8 11 3
block: 3 6 10
block: 10 4 9
block: 9 8 1
block: 1 3 2
block: 2 7 10
block: 10 1 11
block: 11 7 5
block: 5 9 6
block: 6 11 4
block: 4 1 2
block: 2 6 8
block: 8 10 5
block: 5 2 1
block: 1 6 7
block: 7 9 3
block: 3 5 4
block: 4 7 8
)catalog";

inline constexpr std::string_view covering_12 = R"catalog(fixture kind=covering n=12 cah=colorful provenance=bundled
block: 11 6 4
block: 4 5 12
block: 12 3 1
block: 1 8 9
block: 9 11 2
block: 2 12 3
block: 3 11 8
block: 8 12 9
block: 9 4 10
block: 10 7 2
block: 2 1 5
block: 5 9 6
block: 6 12 7
block: 7 5 11
block: 11 1 10
block: 10 5 8
block: 8 6 2
block: 2 4 1
block: 1 6 7
block: 7 9 3
block: 3 6 10
block: 10 12 11
)catalog";

inline constexpr std::string_view covering_14 = R"catalog(fixture kind=covering n=14 cah=colorful provenance=bundled
block: 9 10 13
block: 13 12 14
block: 14 9 10
block: 10 3 5
block: 5 8 4
block: 4 13 1
block: 1 8 3
block: 3 6 2
block: 2 7 13
block: 13 5 11
block: 11 6 4
block: 4 3 14
block: 14 1 2
block: 2 10 8
block: 8 12 9
block: 9 6 5
block: 5 2 1
block: 1 10 11
block: 11 14 12
block: 12 4 10
block: 10 6 7
block: 7 8 11
block: 11 2 12
block: 12 3 13
block: 13 6 8
block: 8 7 14
block: 14 5 6
block: 6 12 1
block: 1 7 9
block: 9 2 4
block: 4 7 3
block: 3 11 9
)catalog";

inline constexpr std::string_view covering_16 = R"catalog(fixture kind=covering n=16 cah=colorful provenance=bundled
block: 7 6 8
block: 8 3 9
block: 9 7 4
block: 4 13 8
block: 8 14 1
block: 1 9 12
block: 12 11 6
block: 6 14 2
block: 2 13 7
block: 7 10 12
block: 12 14 13
block: 13 11 5
block: 5 10 1
block: 1 4 6
block: 6 5 16
block: 16 1 2
block: 2 8 10
block: 10 9 11
block: 11 7 1
block: 1 15 2
block: 2 3 12
block: 12 4 15
block: 15 5 6
block: 6 13 9
block: 9 14 15
block: 15 11 8
block: 8 7 16
block: 16 9 10
block: 10 4 14
block: 14 16 13
block: 13 1 3
block: 3 14 11
block: 11 16 12
block: 12 8 5
block: 5 7 14
block: 14 15 16
block: 16 3 4
block: 4 11 2
block: 2 9 5
block: 5 4 3
block: 3 6 10
block: 10 13 15
block: 15 3 7
)catalog";

inline constexpr std::string_view covering_20 = R"catalog(fixture kind=covering n=20 cah=colorful provenance=bundled
block: 12 5 3
block: 3 14 8
block: 8 13 19
block: 19 11 5
block: 5 8 4
block: 4 2 11
block: 11 12 15
block: 15 14 18
block: 18 1 8
block: 8 10 17
block: 17 3 9
block: 9 19 2
block: 2 3 6
block: 6 8 15
block: 15 10 2
block: 2 7 13
block: 13 14 20
block: 20 1 2
block: 2 18 17
block: 18 13 14
block: 14 1 9
block: 9 13 10
block: 10 5 16
block: 16 9 7
block: 7 19 17
block: 17 5 15
block: 15 7 1
block: 1 3 10
block: 10 6 7
block: 7 11 8
block: 8 2 16
block: 16 13 12
block: 12 4 17
block: 17 18 20
block: 20 9 10
block: 10 4 18
block: 18 13 5
block: 5 6 9
block: 9 4 15
block: 15 20 16
block: 16 3 11
block: 11 10 14
block: 14 16 4
block: 4 7 3
block: 3 19 18
block: 18 6 16
block: 16 1 17
block: 17 11 6
block: 6 13 4
block: 4 3 20
block: 20 19 18
block: 18 7 12
block: 12 2 14
block: 14 7 5
block: 5 2 1
block: 1 6 12
block: 12 8 9
block: 9 18 11
block: 11 12 20
block: 20 5 6
block: 6 14 19
block: 19 16 15
block: 15 3 13
block: 13 11 1
block: 1 4 19
block: 19 10 12
)catalog";

inline constexpr std::string_view gdd3_2e3 = R"catalog(fixture kind=gdd3 n=6 type=2^3 cah=alternating provenance=bundled
group: 1 4
group: 2 5
group: 3 6
block: 2 1 3
block: 3 4 5
block: 5 1 6
block: 6 4 2
)catalog";

inline constexpr std::string_view gdd3_2e4 = R"catalog(fixture kind=gdd3 n=8 type=2^4 cah=colorful provenance=bundled
group: 1 5
group: 2 6
group: 3 7
group: 4 8
block: 2 3 1
block: 1 8 7
block: 7 2 4
block: 4 1 6
block: 6 7 5
block: 5 4 3
block: 3 6 8
block: 8 5 2
)catalog";

inline constexpr std::string_view gdd3_1e6_3e1 = R"catalog(fixture kind=gdd3 n=9 type=1^6,3^1 cah=colorful provenance=bundled
group: 1
group: 2
group: 3
group: 6
group: 7
group: 8
group: 4 5 9
block: 8 6 4
block: 4 1 7
block: 7 9 2
block: 2 4 3
block: 3 6 9
block: 9 8 1
block: 1 3 5
block: 5 8 2
block: 2 1 6
block: 6 5 7
block: 7 3 8
)catalog";

inline constexpr std::string_view gdd3_3e3 = R"catalog(fixture kind=gdd3 n=9 type=3^3 cah=colorful provenance=bundled
group: 1 4 7
group: 2 5 8
group: 3 6 9
block: 5 6 7
block: 7 3 8
block: 8 1 9
block: 9 7 2
block: 2 4 3
block: 3 5 1
block: 1 2 6
block: 6 8 4
block: 4 9 5
)catalog";

inline constexpr std::string_view gdd3_2e3_4e1 = R"catalog(fixture kind=gdd3 n=10 type=2^3,4^1 cah=colorful provenance=bundled
group: 1 5
group: 2 6
group: 3 7
group: 4 8 9 10
block: 4 2 1
block: 1 8 3
block: 3 2 9
block: 9 6 1
block: 1 7 10
block: 10 5 2
block: 2 7 8
block: 8 5 6
block: 6 10 3
block: 3 4 5
block: 5 9 7
block: 7 6 4
)catalog";

inline constexpr std::string_view gdd3_2e6 = R"catalog(fixture kind=gdd3 n=12 type=2^6 cah=colorful provenance=bundled
group: 1 7
group: 2 8
group: 3 9
group: 4 10
group: 5 11
group: 6 12
block: 3 2 1
block: 1 5 4
block: 4 2 6
block: 6 8 1
block: 1 10 9
block: 9 2 11
block: 11 1 12
block: 12 10 2
block: 2 5 7
block: 7 4 3
block: 3 5 12
block: 12 9 4
block: 4 8 11
block: 11 3 6
block: 6 7 9
block: 9 8 5
block: 5 6 10
block: 10 11 7
block: 7 12 8
block: 8 10 3
)catalog";

inline constexpr std::string_view gdd3_1e123 = R"catalog(fixture kind=gdd3 n=123 type=1^123 cah=colorful provenance=bundled
group: 1
group: 2
group: 4
group: 5
group: 6
group: 7
group: 9
group: 10
group: 11
group: 12
group: 13
group: 15
group: 3 8 14
block: 11 15 5
block: 5 13 1
block: 1 9 12
block: 12 3 5
block: 5 14 9
block: 9 15 2
block: 2 10 13
block: 13 12 7
block: 7 6 1
block: 1 3 2
block: 2 8 12
block: 12 6 14
block: 14 15 13
block: 13 4 3
block: 3 15 7
block: 7 8 9
block: 9 4 10
block: 10 8 5
block: 5 7 2
block: 2 14 4
block: 4 12 15
block: 15 1 10
block: 10 12 11
block: 11 3 9
block: 9 6 13
block: 13 11 8
block: 8 15 6
block: 6 5 4
block: 4 8 1
block: 1 14 11
block: 11 4 7
block: 7 14 10
block: 10 3 6
block: 6 2 11
)catalog";

inline constexpr std::string_view gdd3_5e3 = R"catalog(fixture kind=gdd3 n=15 type=5^3 cah=colorful provenance=bundled
group: 1 4 7 10 13
group: 2 5 8 11 14
group: 3 6 9 12 15
block: 2 3 1
block: 1 11 6
block: 6 4 5
block: 5 9 1
block: 1 8 15
block: 15 2 4
block: 4 9 14
block: 14 1 12
block: 12 8 4
block: 4 11 3
block: 3 5 7
block: 7 8 9
block: 9 10 2
block: 2 12 7
block: 7 14 6
block: 6 10 8
block: 8 13 3
block: 3 10 14
block: 14 15 13
block: 13 5 12
block: 12 11 10
block: 10 5 15
block: 15 7 11
block: 11 9 13
block: 13 6 2
)catalog";

inline constexpr std::string_view gdd4_3e4 = R"catalog(fixture kind=gdd4 n=12 type=3^4 provenance=bundled
group: 1 5 9
group: 2 6 10
group: 3 7 11
group: 4 8 12
block: 1 2 3 4 !bold
block: 1 6 7 8 !bold
block: 2 8 9 11 !bold
block: 3 5 8 10 !bold
block: 4 5 6 11
block: 4 7 9 10
block: 2 5 7 12
block: 1 10 11 12
block: 3 6 9 12
)catalog";

inline constexpr std::string_view gdd4_3e5 = R"catalog(fixture kind=gdd4 n=15 type=3^5 provenance=bundled
group: 1 6 11
group: 2 7 12
group: 3 8 13
group: 4 9 14
group: 5 10 15
block: 1 2 4 8 !bold
block: 2 3 5 9 !bold
block: 3 4 6 10 !bold
block: 4 5 7 11 !bold
block: 5 6 8 12 !bold
block: 6 7 9 13 !bold
block: 7 8 10 14 !bold
block: 2 10 11 13
block: 1 9 10 12
block: 3 11 12 14
block: 4 12 13 15
block: 1 5 13 14
block: 2 6 14 15
block: 1 3 7 15
block: 8 9 11 15
)catalog";

inline constexpr std::string_view gdd4_3e8 = R"catalog(fixture kind=gdd4 n=24 type=3^8 provenance=bundled
group: 1 9 17
group: 2 10 18
group: 3 11 19
group: 4 12 20
group: 5 13 21
group: 6 14 22
group: 7 15 23
group: 8 16 24
block: 9 14 15 19 !bold
block: 1 2 5 19 !bold
block: 1 3 8 12 !bold
block: 2 3 6 20 !bold
block: 2 4 13 16 !bold
block: 3 4 7 21 !bold
block: 4 5 9 22 !bold
block: 5 6 10 23 !bold
block: 1 6 7 11 !bold
block: 11 17 18 21 !bold
block: 2 7 9 12
block: 3 9 10 13
block: 4 10 11 14
block: 5 11 12 15
block: 6 12 13 17
block: 7 13 14 18
block: 10 15 17 20
block: 12 18 19 22
block: 13 19 20 23
block: 1 14 20 21
block: 2 15 21 22
block: 3 17 22 23
block: 1 4 18 23
block: 5 8 18 20
block: 4 17 19 24
block: 3 15 16 18
block: 2 8 14 17
block: 1 13 15 24
block: 12 14 16 23
block: 2 11 23 24
block: 1 10 16 22
block: 8 9 21 23
block: 7 20 22 24
block: 6 16 19 21
block: 8 11 13 22
block: 10 12 21 24
block: 9 11 16 20
block: 7 8 10 19
block: 6 9 18 24
block: 5 7 16 17
block: 4 6 8 15
block: 3 5 14 24
)catalog";

inline constexpr std::string_view gdd4_3e9 = R"catalog(fixture kind=gdd4 n=27 type=3^9 provenance=bundled
group: 1 10 19
group: 2 11 20
group: 3 12 21
group: 4 13 22
group: 5 14 23
group: 6 15 24
group: 7 16 25
group: 8 17 26
group: 9 18 27
block: 1 16 18 22 !bold
block: 3 16 19 24 !bold
block: 8 10 13 24 !bold
block: 2 13 15 25 !bold
block: 2 4 19 23 !bold
block: 1 4 15 26 !bold
block: 3 15 20 23 !bold
block: 3 4 5 7 !bold
block: 2 5 6 21 !bold
block: 1 2 7 17 !bold
block: 3 10 14 17 !bold
block: 4 9 10 25 !bold
block: 7 8 9 12 !bold
block: 5 12 19 26 !bold
block: 11 12 14 24 !bold
block: 12 13 16 23
block: 1 13 14 20
block: 2 9 14 16
block: 14 21 22 25
block: 2 3 8 22
block: 3 18 25 26
block: 7 11 18 23
block: 7 10 15 21
block: 9 11 15 17
block: 4 6 11 16
block: 5 8 15 16
block: 8 11 19 25
block: 9 19 20 21
block: 9 22 23 26
block: 7 20 22 24
block: 17 23 24 25
block: 6 8 18 20
block: 4 12 17 20
block: 2 10 12 18
block: 10 16 20 26
block: 5 10 11 22
block: 4 18 21 24
block: 11 13 21 26
block: 6 7 14 26
block: 14 15 18 19
block: 6 17 19 22
block: 1 6 12 25
block: 1 8 21 23
block: 1 5 9 24
block: 3 6 9 13
block: 5 13 17 18
block: 7 13 19 27
block: 12 15 22 27
block: 6 10 23 27
block: 2 24 26 27
block: 4 8 14 27
block: 1 3 11 27
block: 16 17 21 27
block: 5 20 25 27
)catalog";

inline constexpr std::string_view gdd4_3e12 = R"catalog(fixture kind=gdd4 n=36 type=3^12 provenance=bundled
group: 1 13 25
group: 2 14 26
group: 3 15 27
group: 4 16 28
group: 5 17 29
group: 6 18 30
group: 7 19 31
group: 8 20 32
group: 9 21 33
group: 10 22 34
group: 11 23 35
group: 12 24 36
block: 1 8 12 19 !bold
block: 1 2 5 10 !bold
block: 2 3 6 11 !bold
block: 3 4 7 13 !bold
block: 4 5 8 14 !bold
block: 5 6 9 15 !bold
block: 6 7 10 16 !bold
block: 7 8 11 17 !bold
block: 8 9 13 18 !bold
block: 9 10 14 19 !bold
block: 2 9 20 24 !bold
block: 10 11 15 20 !bold
block: 11 13 16 21 !bold
block: 13 14 17 22 !bold
block: 14 15 18 23 !bold
block: 15 16 19 25 !bold
block: 16 17 20 26 !bold
block: 17 18 21 27 !bold
block: 18 19 22 28 !bold
block: 19 20 23 29 !bold
block: 20 21 25 30 !bold
block: 21 22 26 31 !bold
block: 22 23 27 32 !bold
block: 23 25 28 33 !bold
block: 25 26 29 34 !bold
block: 26 27 30 35 !bold
block: 1 27 28 31 !bold
block: 2 28 29 32 !bold
block: 3 29 30 33 !bold
block: 4 30 31 34 !bold
block: 5 31 32 35 !bold
block: 1 6 32 33 !bold
block: 2 7 33 34 !bold
block: 3 8 34 35 !bold
block: 1 4 9 35 !bold
block: 5 7 20 27
block: 5 13 23 24
block: 4 6 19 26
block: 4 11 12 22
block: 3 5 18 25
block: 3 10 21 36
block: 2 4 17 23
block: 1 3 16 22
block: 9 11 25 31
block: 9 17 28 36
block: 8 10 23 30
block: 8 16 24 27
block: 7 9 22 29
block: 7 12 15 26
block: 6 8 21 28
block: 6 14 25 36
block: 14 16 29 35
block: 12 14 21 32
block: 13 15 28 34
block: 13 20 31 36
block: 11 14 27 33
block: 11 19 24 30
block: 10 13 26 32
block: 10 12 18 29
block: 3 17 19 32
block: 12 17 25 35
block: 2 16 18 31
block: 16 23 34 36
block: 1 15 17 30
block: 15 22 24 33
block: 6 20 22 35
block: 3 12 20 28
block: 5 19 21 34
block: 2 19 27 36
block: 4 18 20 33
block: 1 18 24 26
block: 3 9 23 26
block: 6 12 23 31
block: 2 8 22 25
block: 5 22 30 36
block: 1 7 21 23
block: 4 21 24 29
block: 6 13 27 29
block: 9 12 27 34
block: 5 11 26 28
block: 8 26 33 36
block: 4 10 25 27
block: 7 24 25 32
block: 9 16 30 32
block: 2 12 13 30
block: 8 15 29 31
block: 1 11 29 36
block: 7 14 28 30
block: 10 24 28 35
block: 11 18 32 34
block: 4 15 32 36
block: 10 17 31 33
block: 3 14 24 31
block: 2 15 21 35
block: 7 18 35 36
block: 1 14 20 34
block: 6 17 24 34
block: 13 19 33 35
block: 5 12 16 33
)catalog";

inline constexpr std::string_view gdd47_3e5_6e1 = R"catalog(fixture kind=gdd47 n=21 type=3^5,6^1 provenance=bundled
group: 1 2 3
group: 4 5 6
group: 7 8 9
group: 10 11 12
group: 13 14 15
group: 16 17 18 19 20 21
block: 1 4 14 16 !bold
block: 2 11 13 16 !bold
block: 5 7 15 16 !bold
block: 1 7 11 17 !bold
block: 5 10 13 17 !bold
block: 6 8 15 17 !bold
block: 6 9 12 16 !bold
block: 3 8 10 16 !bold
block: 2 9 14 17 !italic
block: 1 9 10 18 !italic
block: 3 4 12 17
block: 4 9 13 19
block: 4 11 15 18
block: 8 12 13 18
block: 2 6 7 18
block: 3 5 14 18
block: 1 5 8 19
block: 7 12 14 19
block: 2 10 15 19
block: 3 6 11 19
block: 1 6 13 20
block: 4 7 10 20
block: 8 11 14 20
block: 2 5 12 20
block: 3 9 15 20
block: 1 12 15 21
block: 6 10 14 21
block: 5 9 11 21
block: 2 4 8 21
block: 3 7 13 21
)catalog";

inline constexpr std::string_view gdd47_3e6_6e1 = R"catalog(fixture kind=gdd47 n=24 type=3^6,6^1 provenance=bundled
group: 1 2 3
group: 4 5 6
group: 7 8 9
group: 10 11 12
group: 13 14 15
group: 16 17 18
group: 19 20 21 22 23 24
block: 10 13 18 20 !bold
block: 3 8 11 20 !bold
block: 1 7 11 16 !bold
block: 3 13 16 19 !bold
block: 5 8 18 19 !bold
block: 2 5 10 14 !bold
block: 6 11 14 19 !bold
block: 2 4 9 19 !bold
block: 1 12 17 19 !bold
block: 1 5 15 20 !bold
block: 1 4 18 21 !italic
block: 7 14 18 22 !italic
block: 2 6 16 20
block: 4 8 13 17
block: 9 14 17 20
block: 4 7 12 20
block: 7 10 15 19
block: 2 11 18 23
block: 3 5 7 21
block: 3 10 17 22
block: 3 4 14 23
block: 6 8 10 21
block: 1 6 13 22
block: 6 7 17 23
block: 9 11 13 21
block: 5 9 16 22
block: 1 9 10 23
block: 12 14 16 21
block: 2 8 12 22
block: 5 12 13 23
block: 2 15 17 21
block: 4 11 15 22
block: 8 15 16 23
block: 1 8 14 24
block: 4 10 16 24
block: 5 11 17 24
block: 2 7 13 24
block: 3 6 9 12 15 18 24
)catalog";

inline constexpr std::string_view gdd47_3e10_12e1 = R"catalog(fixture kind=gdd47 n=42 type=3^10,12^1 provenance=bundled
group: 1 2 3
group: 4 5 6
group: 7 8 9
group: 10 11 12
group: 13 14 15
group: 16 17 18
group: 19 20 21
group: 22 23 24
group: 25 26 27
group: 28 29 30
group: 31 32 33 34 35 36 37 38 39 40 41 42
block: 1 4 8 31 !bold
block: 4 7 11 32 !bold
block: 7 16 29 31 !bold
block: 3 19 25 31 !bold
block: 2 10 19 32 !bold
block: 2 11 18 31 !bold
block: 12 15 24 31 !bold
block: 13 24 25 32 !bold
block: 6 22 28 32 !bold
block: 14 17 28 31 !bold
block: 10 21 22 31 !bold
block: 5 14 21 32 !bold
block: 1 17 20 32 !bold
block: 9 20 26 31 !bold
block: 8 26 30 32 !bold
block: 12 23 29 32 !bold
block: 15 18 27 32 !bold
block: 6 13 30 31 !bold
block: 6 12 19 33 !italic
block: 2 6 14 34 !italic
block: 5 23 27 31
block: 3 9 16 32
block: 7 10 14 33
block: 1 9 25 33
block: 5 13 22 33
block: 16 27 28 33
block: 4 20 23 33
block: 3 11 29 33
block: 2 15 26 33
block: 8 17 24 33
block: 18 21 30 33
block: 10 13 17 34
block: 4 12 28 34
block: 8 16 25 34
block: 1 19 30 34
block: 7 23 26 34
block: 9 15 22 34
block: 5 18 29 34
block: 11 20 27 34
block: 3 21 24 34
block: 13 16 20 35
block: 1 7 15 35
block: 11 19 28 35
block: 3 4 22 35
block: 10 26 29 35
block: 12 18 25 35
block: 5 9 17 35
block: 2 8 21 35
block: 14 23 30 35
block: 6 24 27 35
block: 16 19 23 36
block: 4 10 18 36
block: 1 14 22 36
block: 6 7 25 36
block: 2 13 29 36
block: 15 21 28 36
block: 8 12 20 36
block: 5 11 24 36
block: 3 17 26 36
block: 9 27 30 36
block: 19 22 26 37
block: 7 13 21 37
block: 4 17 25 37
block: 9 10 28 37
block: 2 5 16 37
block: 1 18 24 37
block: 11 15 23 37
block: 8 14 27 37
block: 6 20 29 37
block: 3 12 30 37
block: 22 25 29 38
block: 10 16 24 38
block: 7 20 28 38
block: 1 12 13 38
block: 5 8 19 38
block: 4 21 27 38
block: 14 18 26 38
block: 11 17 30 38
block: 2 9 23 38
block: 3 6 15 38
block: 2 25 28 39
block: 13 19 27 39
block: 1 10 23 39
block: 4 15 16 39
block: 8 11 22 39
block: 7 24 30 39
block: 17 21 29 39
block: 3 14 20 39
block: 5 12 26 39
block: 6 9 18 39
block: 1 5 28 40
block: 16 22 30 40
block: 4 13 26 40
block: 7 18 19 40
block: 11 14 25 40
block: 3 10 27 40
block: 2 20 24 40
block: 6 17 23 40
block: 8 15 29 40
block: 9 12 21 40
block: 1 27 29 41
block: 2 4 30 41
block: 3 5 7 41
block: 6 8 10 41
block: 9 11 13 41
block: 12 14 16 41
block: 15 17 19 41
block: 18 20 22 41
block: 21 23 25 41
block: 24 26 28 41
block: 1 6 11 16 21 26 42
block: 2 7 12 17 22 27 42
block: 3 8 13 18 23 28 42
block: 4 9 14 19 24 29 42
block: 5 10 15 20 25 30 42
)catalog";

inline constexpr std::array<std::string_view, 31> all = {
    sts_3,
    sts_7,
    sts_9,
    sts_13,
    sts_15,
    covering_4,
    covering_5,
    covering_6,
    covering_8,
    covering_10,
    covering_11,
    covering_12,
    covering_14,
    covering_16,
    covering_20,
    gdd3_2e3,
    gdd3_2e4,
    gdd3_1e6_3e1,
    gdd3_3e3,
    gdd3_2e3_4e1,
    gdd3_2e6,
    gdd3_1e123,
    gdd3_5e3,
    gdd4_3e4,
    gdd4_3e5,
    gdd4_3e8,
    gdd4_3e9,
    gdd4_3e12,
    gdd47_3e5_6e1,
    gdd47_3e6_6e1,
    gdd47_3e10_12e1,
};

}  // namespace ucover::catalog_data
