#pragma once

#include "lcais/core.hpp"

namespace lcais {

struct MatchPair {
    Index a_index;  // 1-based position in A
    Index b_index;  // 1-based position in B
    Value value;    // A[a_index] = B[b_index]

    friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// All (i, k) with A[i] = B[k], ordered by b_index then a_index. Built by
// sorting A's (value, index) pairs once and binary-searching each B element.
std::vector<MatchPair> compute_matches(std::span<const Value> a, std::span<const Value> b);

// Static layered range tree over the match points, keyed by (b_index,
// a_index). Answers strict dominance queries: all stored points with both
// coordinates greater than the probe. Immutable after construction;
// concurrent queries are safe.
class DominanceIndex {
public:
    explicit DominanceIndex(std::vector<MatchPair> pairs);

    std::size_t size() const { return pts_.size(); }

    // Points in query/vertex order: sorted by (b_index, a_index).
    const std::vector<MatchPair>& points() const { return pts_; }

    // Ids (positions in points()) of all points strictly dominating (b, a),
    // in O(log^2 M + output). Output order unspecified.
    std::vector<std::uint32_t> dominating_ids(Index b, Index a, StatsRecord* stats = nullptr) const;

    std::vector<MatchPair> dominating_pairs(const MatchPair& probe,
                                            StatsRecord* stats = nullptr) const;

    std::uint64_t count_dominating(Index b, Index a) const;

private:
    template <typename Emit>
    void visit_canonical(Index b, Index a, Emit&& emit) const;

    std::size_t leaves_ = 1;
    std::vector<MatchPair> pts_;
    // nodes_[v]: the a-coordinates (with point ids) of v's range, sorted.
    std::vector<std::vector<std::pair<Index, std::uint32_t>>> nodes_;
};

// Number of ordered compatible pairs: matching pairs that form a two-element
// common subsequence. Computed through the range tree.
std::uint64_t count_compatible_pairs(std::span<const MatchPair> pairs);

}  // namespace lcais
