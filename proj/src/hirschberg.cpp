#include "lcais/hirschberg.hpp"

#include <algorithm>

namespace lcais {

LcsRow compute_l(std::span<const Value> a, std::span<const Value> b, StatsRecord* stats) {
    const std::size_t m = b.size();
    CellLease lease(stats);
    lease.grow(2 * (m + 1));
    LcsRow cur(m + 1, 0), prev(m + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        prev.swap(cur);
        cur[0] = 0;
        if (stats) stats->inner_steps += m;
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(cur[j - 1], prev[j]);
        }
    }
    return cur;
}

namespace {

void lcs_rec(std::span<const Value> a, Index a_offset, std::span<const Value> b, Index b_offset,
             StatsRecord* stats, std::vector<WitnessEntry>& out) {
    if (stats) ++stats->recursion_calls;
    if (a.empty() || b.empty()) return;
    if (a.size() == 1) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == a[0]) {
                out.push_back({a[0], a_offset + 1, b_offset + static_cast<Index>(j) + 1});
                return;
            }
        }
        return;
    }

    const std::size_t i = a.size() / 2;
    const std::size_t m = b.size();
    std::size_t best_j = 0;
    {
        CellLease lease(stats);
        lease.grow(a.size() - i + m);  // reversed copies
        std::vector<Value> rev_right(a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
        std::reverse(rev_right.begin(), rev_right.end());
        std::vector<Value> rev_b(b.begin(), b.end());
        std::reverse(rev_b.begin(), rev_b.end());

        LcsRow fwd = compute_l(a.first(i), b, stats);
        LcsRow bwd = compute_l(rev_right, rev_b, stats);
        lease.grow(fwd.size() + bwd.size());

        // bwd is indexed over reversed B prefixes, so the suffix B[j+1..m]
        // is read at offset m - j. Smallest maximizing j keeps the recursion
        // deterministic.
        Index best = -1;
        for (std::size_t j = 0; j <= m; ++j) {
            const Index total = fwd[j] + bwd[m - j];
            if (total > best) {
                best = total;
                best_j = j;
            }
        }
    }

    lcs_rec(a.first(i), a_offset, b.first(best_j), b_offset, stats, out);
    lcs_rec(a.subspan(i), a_offset + static_cast<Index>(i), b.subspan(best_j),
            b_offset + static_cast<Index>(best_j), stats, out);
}

}  // namespace

Witness lcs(std::span<const Value> a, std::span<const Value> b, StatsRecord* stats) {
    Witness w;
    lcs_rec(a, 0, b, 0, stats, w.entries);
    return w;
}

}  // namespace lcais
