#pragma once

// Test-only oracle: exhaustive branch-and-bound for the minimum size of an
// (n,3,2)-covering. Independent of the covering_number formula it checks.

#include <algorithm>
#include <utility>
#include <vector>

namespace ucover::testsupport {

inline int min_cover_bruteforce(int n) {
    const int total_pairs = n * (n - 1) / 2;
    int best = total_pairs;  // one triple per pair always suffices
    auto idx = [n](int x, int y) { return x * (n + 1) + y; };

    auto go = [&](auto&& self, std::vector<char> cov, int used, int covered_count) -> void {
        if (covered_count == total_pairs) {
            best = std::min(best, used);
            return;
        }
        if (used + (total_pairs - covered_count + 2) / 3 >= best) return;
        int fx = 0, fy = 0;
        for (int x = 1; x <= n && fx == 0; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (!cov[idx(x, y)]) { fx = x; fy = y; break; }
        // any covering contains a triple through the first uncovered pair
        for (int z = 1; z <= n; ++z) {
            if (z == fx || z == fy) continue;
            auto next = cov;
            int gained = 0;
            int xs[3] = {fx, fy, z};
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int p = std::min(xs[i], xs[j]), q = std::max(xs[i], xs[j]);
                    if (!next[idx(p, q)]) { next[idx(p, q)] = 1; ++gained; }
                }
            self(self, std::move(next), used + 1, covered_count + gained);
        }
    };
    go(go, std::vector<char>((n + 1) * (n + 1), 0), 0, 0);
    return best;
}

}  // namespace ucover::testsupport
