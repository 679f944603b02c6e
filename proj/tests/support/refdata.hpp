#pragma once

// Reference 2-radius sequence data used by tests and the acceptance suite:
// known short sequences, the known-value table for f2, and published
// comparison lengths for orders 9..44.

#include <array>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace ucover::refdata {

struct RefSequence { int n; std::vector<int> seq; };

inline const std::vector<RefSequence>& known_sequences() {
    static const std::vector<RefSequence> v = {
        {8, {3, 6, 2, 7, 8, 5, 6, 4, 1, 8, 7, 3, 4, 2, 5, 1, 3}},
        {10, {2, 6, 8, 10, 9, 1, 5, 4, 7, 10, 2, 6, 4, 5, 9, 2, 1, 3, 10, 5, 8, 7, 9, 3, 6, 7, 1, 8, 4, 3}},
        {11, {10, 9, 7, 11, 2, 3, 1, 10, 11, 8, 6, 3, 1, 7, 4, 11, 3, 5, 9, 6, 4, 10, 2, 5, 6, 4, 7, 8, 5, 9, 1, 2, 8}},
        {12, {12, 6, 7, 11, 10, 9, 3, 6, 5, 2, 9, 1, 8, 5, 7, 3, 12, 1, 10, 6, 4, 8, 3, 11, 2, 1, 7, 4, 9, 12, 8, 2, 10, 4, 5, 11, 12}},
        {14, {13, 9, 8, 12, 2, 5, 3, 11, 13, 14, 4, 9, 10, 1, 6, 14, 8, 3, 7, 10, 11, 8, 14, 5, 7, 13, 12, 6, 4, 8, 1, 3, 6, 2, 11, 9, 12, 3, 10, 4, 13, 2, 1, 7, 11, 4, 1, 5, 12, 10, 14, 2, 5, 9, 6, 7}},
        {15, {10, 9, 7, 1, 11, 14, 9, 15, 12, 2, 8, 6, 13, 7, 5, 3, 15, 6, 11, 12, 5, 14, 2, 3, 10, 12, 1, 13, 3, 4, 11, 15, 8, 10, 5, 6, 9, 3, 8, 5, 1, 4, 2, 6, 14, 1, 13, 15, 7, 8, 14, 4, 10, 11, 13, 2, 9, 7, 4, 12}},
        {16, {7, 8, 9, 6, 10, 4, 15, 13, 1, 6, 12, 3, 15, 8, 16, 12, 10, 5, 2, 15, 6, 11, 16, 2, 13, 9, 12, 16, 14, 4, 3, 5, 11, 8, 10, 13, 7, 3, 15, 9, 14, 11, 13, 7, 5, 16, 1, 3, 10, 2, 14, 8, 4, 1, 2, 7, 12, 4, 11, 9, 1, 5, 14, 6, 7}},
        {18, {2, 9, 7, 1, 17, 5, 12, 13, 4, 17, 9, 18, 6, 1, 15, 8, 13, 16, 6, 4, 7, 1, 16, 10, 18, 17, 6, 14, 11, 7, 12, 10, 14, 15, 13, 11, 16, 3, 15, 12, 18, 4, 3, 10, 6, 1, 12, 14, 8, 5, 18, 7, 13, 8, 9, 10, 3, 13, 1, 2, 11, 8, 17, 3, 5, 2, 6, 8, 11, 4, 14, 2, 18, 10, 11, 5, 9, 16, 15, 2, 17, 12, 16, 9, 14, 3, 7, 15, 4, 5}},
        {9, {9, 3, 2, 7, 8, 4, 9, 3, 1, 8, 5, 9, 7, 6, 1, 2, 4, 5, 6, 3, 8}},
        {13, {4, 9, 11, 5, 7, 4, 8, 2, 11, 3, 1, 4, 12, 10, 11, 13, 6, 4, 9, 1, 8, 10, 6, 3, 12, 7, 9, 10, 2, 5, 6, 1, 7, 2, 13, 12, 5, 8, 3, 13, 9, 1}},
        {17, {1, 2, 3, 4, 5, 1, 6, 7, 3, 8, 9, 1, 10, 11, 3, 12, 13, 1, 14, 15, 3, 16, 17, 2, 5, 7, 9, 4, 6, 8, 2, 11, 13, 4, 10, 12, 5, 8, 13, 15, 6, 10, 14, 2, 9, 15, 12, 7, 14, 11, 5, 15, 17, 4, 14, 16, 8, 10, 17, 7, 13, 16, 9, 11, 17, 6, 12, 16, 2, 5, 1, 17, 16}},
    };
    return v;
}

// f2 state of knowledge, entries (n, low, high); low == high when exact.
inline constexpr std::array<std::tuple<int,int,int>, 17> f2_known = {{
    std::tuple<int,int,int>{2, 2, 2},
    std::tuple<int,int,int>{3, 3, 3},
    std::tuple<int,int,int>{4, 5, 5},
    std::tuple<int,int,int>{5, 7, 7},
    std::tuple<int,int,int>{6, 12, 12},
    std::tuple<int,int,int>{7, 14, 14},
    std::tuple<int,int,int>{8, 17, 17},
    std::tuple<int,int,int>{9, 20, 21},
    std::tuple<int,int,int>{10, 30, 30},
    std::tuple<int,int,int>{11, 33, 33},
    std::tuple<int,int,int>{12, 37, 37},
    std::tuple<int,int,int>{13, 41, 42},
    std::tuple<int,int,int>{14, 56, 56},
    std::tuple<int,int,int>{15, 60, 60},
    std::tuple<int,int,int>{16, 65, 65},
    std::tuple<int,int,int>{17, 70, 73},
    std::tuple<int,int,int>{18, 90, 90},
}};

// Achieved lengths for n = 9..44: this construction and the
// number-theoretic comparison construction (actual and provable).
inline constexpr int ref_first_n = 9;
inline constexpr std::array<int, 36> len_this = {25, 35, 39, 49, 53, 67, 71, 87, 93, 109, 115, 135, 141, 163, 171, 193, 201, 227, 235, 263, 273, 301, 311, 343, 353, 387, 399, 433, 445, 483, 495, 535, 549, 589, 603, 647};
inline constexpr std::array<int, 36> len_jl_actual = {37, 49, 39, 53, 45, 62, 80, 99, 76, 98, 105, 129, 158, 185, 150, 179, 170, 202, 256, 290, 217, 254, 297, 336, 382, 424, 361, 405, 351, 398, 446, 495, 430, 482, 540, 594};
inline constexpr std::array<int, 36> len_jl_theory = {346, 410, 479, 552, 629, 711, 798, 888, 983, 1082, 1185, 1292, 1403, 1518, 1638, 1761, 1888, 2019, 2153, 2292, 2434, 2580, 2730, 2884, 3041, 3202, 3366, 3535, 3707, 3882, 4061, 4244, 4430, 4620, 4813, 5010};

}  // namespace ucover::refdata
