#pragma once

#include "lcais/core.hpp"
#include "lcais/match_index.hpp"

namespace lcais {

struct VertexTuple {
    Value w;             // minimized largest element of a subsequence of this length
    std::int64_t parent; // id of the preceding vertex, -1 for a chain start

    friend bool operator==(const VertexTuple&, const VertexTuple&) = default;
};

// Tuple list of one matching-pair vertex. Lengths form the contiguous range
// 1..max_len(); the length-1 tuple (e_i, -1) exists from construction.
class VertexState {
public:
    VertexState() = default;
    explicit VertexState(Value element) : element_(element) { tuples_.push_back({element, -1}); }

    Value element() const { return element_; }
    std::size_t max_len() const { return tuples_.size(); }
    const VertexTuple& tuple(std::size_t r) const { return tuples_[r - 1]; }

    // Insert at length r, or keep the entry with the smaller bound.
    // Returns true when a new slot was appended.
    bool offer(std::size_t r, Value w, std::int64_t parent);

private:
    Value element_ = 0;
    std::vector<VertexTuple> tuples_;
};

// Propagate every extendable tuple of vertex i across the edge (i, j):
// candidates with e_j + delta <= w are skipped, new lengths are appended,
// equal lengths keep the smaller largest-element bound. Requires i < j and
// final tuples at i.
void relax_edge(std::vector<VertexState>& states, std::size_t i, std::size_t j, Delta delta,
                StatsRecord* stats = nullptr);

// Walk parent links from the tuple of length r at the given vertex and return
// the forward-ordered witness. Throws BrokenChain on inconsistent links.
Witness reconstruct(const std::vector<VertexState>& states, std::span<const MatchPair> points,
                    std::size_t vertex, std::size_t r);

// Matching-pair DAG solver: vertices in (b_index, a_index) order, outgoing
// edges found per vertex through the dominance index and filtered by the
// almost-increasing condition, tuples relaxed in one pass.
Witness sparse_lcais(std::span<const Value> a, std::span<const Value> b, Delta delta,
                     StatsRecord* stats = nullptr);

}  // namespace lcais
