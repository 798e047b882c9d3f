#include "lcais/match_index.hpp"

#include <algorithm>
#include <bit>

namespace lcais {

std::vector<MatchPair> compute_matches(std::span<const Value> a, std::span<const Value> b) {
    std::vector<std::pair<Value, Index>> sorted_a;
    sorted_a.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        sorted_a.emplace_back(a[i], static_cast<Index>(i + 1));
    std::sort(sorted_a.begin(), sorted_a.end());

    std::vector<MatchPair> out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const Value v = b[k];
        auto [lo, hi] = std::equal_range(sorted_a.begin(), sorted_a.end(), std::pair{v, Index{0}},
                                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto it = lo; it != hi; ++it)
            out.push_back({it->second, static_cast<Index>(k + 1), v});
    }
    return out;
}

DominanceIndex::DominanceIndex(std::vector<MatchPair> pairs) : pts_(std::move(pairs)) {
    std::sort(pts_.begin(), pts_.end(), [](const MatchPair& x, const MatchPair& y) {
        return std::pair{x.b_index, x.a_index} < std::pair{y.b_index, y.a_index};
    });
    leaves_ = std::bit_ceil(std::max<std::size_t>(pts_.size(), 1));
    nodes_.assign(2 * leaves_, {});
    for (std::size_t i = 0; i < pts_.size(); ++i)
        nodes_[leaves_ + i] = {{pts_[i].a_index, static_cast<std::uint32_t>(i)}};
    for (std::size_t v = leaves_ - 1; v >= 1; --v) {
        const auto& l = nodes_[2 * v];
        const auto& r = nodes_[2 * v + 1];
        auto& dst = nodes_[v];
        dst.resize(l.size() + r.size());
        std::merge(l.begin(), l.end(), r.begin(), r.end(), dst.begin());
    }
}

template <typename Emit>
void DominanceIndex::visit_canonical(Index b, Index a, Emit&& emit) const {
    if (pts_.empty()) return;
    // Points with b_index > b form a suffix of the (b, a)-sorted order.
    const std::size_t lo =
        static_cast<std::size_t>(std::upper_bound(pts_.begin(), pts_.end(), b,
                                                  [](Index bq, const MatchPair& p) {
                                                      return bq < p.b_index;
                                                  }) -
                                 pts_.begin());
    std::size_t l = lo + leaves_;
    std::size_t r = pts_.size() + leaves_;
    while (l < r) {
        if (l & 1) emit(nodes_[l++], a);
        if (r & 1) emit(nodes_[--r], a);
        l >>= 1;
        r >>= 1;
    }
}

std::vector<std::uint32_t> DominanceIndex::dominating_ids(Index b, Index a,
                                                          StatsRecord* stats) const {
    if (stats) ++stats->range_queries;
    std::vector<std::uint32_t> out;
    visit_canonical(b, a, [&](const auto& node, Index aq) {
        if (stats) ++stats->inner_steps;
        auto it = std::upper_bound(node.begin(), node.end(), std::pair{aq, ~std::uint32_t{0}});
        for (; it != node.end(); ++it) {
            if (stats) ++stats->inner_steps;
            out.push_back(it->second);
        }
    });
    return out;
}

std::vector<MatchPair> DominanceIndex::dominating_pairs(const MatchPair& probe,
                                                        StatsRecord* stats) const {
    std::vector<MatchPair> out;
    for (std::uint32_t id : dominating_ids(probe.b_index, probe.a_index, stats))
        out.push_back(pts_[id]);
    return out;
}

std::uint64_t DominanceIndex::count_dominating(Index b, Index a) const {
    std::uint64_t count = 0;
    visit_canonical(b, a, [&](const auto& node, Index aq) {
        count += static_cast<std::uint64_t>(
            node.end() - std::upper_bound(node.begin(), node.end(), std::pair{aq, ~std::uint32_t{0}}));
    });
    return count;
}

std::uint64_t count_compatible_pairs(std::span<const MatchPair> pairs) {
    DominanceIndex idx(std::vector<MatchPair>(pairs.begin(), pairs.end()));
    std::uint64_t total = 0;
    for (const MatchPair& p : idx.points()) total += idx.count_dominating(p.b_index, p.a_index);
    return total;
}

}  // namespace lcais
