#include "lcais/sparse.hpp"

#include <algorithm>
#include <cassert>

namespace lcais {

bool VertexState::offer(std::size_t r, Value w, std::int64_t parent) {
    assert(r >= 1 && r <= tuples_.size() + 1);
    if (r == tuples_.size() + 1) {
        tuples_.push_back({w, parent});
        return true;
    }
    VertexTuple& t = tuples_[r - 1];
    if (w < t.w) t = {w, parent};
    return false;
}

void relax_edge(std::vector<VertexState>& states, std::size_t i, std::size_t j, Delta delta,
                StatsRecord* stats) {
    assert(i < j);
    const Value ej = states[j].element();
    const std::size_t src_len = states[i].max_len();
    for (std::size_t r = 1; r <= src_len; ++r) {
        if (stats) ++stats->inner_steps;
        const VertexTuple& t = states[i].tuple(r);
        if (ej + delta.value() <= t.w) continue;
        const bool appended = states[j].offer(r + 1, std::max(t.w, ej), static_cast<std::int64_t>(i));
        if (appended && stats) stats->tuples_acquired(1);
    }
}

Witness reconstruct(const std::vector<VertexState>& states, std::span<const MatchPair> points,
                    std::size_t vertex, std::size_t r) {
    if (r == 0 || vertex >= states.size() || r > states[vertex].max_len())
        throw BrokenChain("no tuple of the requested length at the start vertex");

    std::vector<WitnessEntry> rev;
    std::size_t v = vertex;
    std::size_t need = r;
    while (true) {
        const MatchPair& p = points[v];
        rev.push_back({p.value, p.a_index, p.b_index});
        const VertexTuple& t = states[v].tuple(need);
        if (need == 1) {
            if (t.parent != -1) throw BrokenChain("length-1 tuple carries a parent");
            break;
        }
        if (t.parent < 0 || static_cast<std::size_t>(t.parent) >= v)
            throw BrokenChain("missing or non-descending parent link");
        const auto pv = static_cast<std::size_t>(t.parent);
        if (states[pv].max_len() < need - 1)
            throw BrokenChain("parent lacks a tuple one shorter");
        v = pv;
        --need;
    }
    std::reverse(rev.begin(), rev.end());
    return Witness{std::move(rev)};
}

Witness sparse_lcais(std::span<const Value> a, std::span<const Value> b, Delta delta,
                     StatsRecord* stats) {
    DominanceIndex index(compute_matches(a, b));
    const std::vector<MatchPair>& points = index.points();
    const std::size_t count = points.size();

    std::vector<VertexState> states;
    states.reserve(count);
    for (const MatchPair& p : points) states.emplace_back(p.value);
    if (stats) stats->tuples_acquired(count);

    std::size_t best_r = count > 0 ? 1 : 0;
    std::size_t best_v = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const MatchPair& p = points[i];
        for (std::uint32_t j : index.dominating_ids(p.b_index, p.a_index, stats)) {
            if (points[j].value + delta.value() <= p.value) continue;
            if (stats) ++stats->edges_relaxed;
            relax_edge(states, i, j, delta, stats);
            const std::size_t len = states[j].max_len();
            if (len > best_r || (len == best_r && j < best_v)) {
                best_r = len;
                best_v = j;
            }
        }
    }

    Witness w = count > 0 ? reconstruct(states, points, best_v, best_r) : Witness{};
    if (stats) {
        std::uint64_t total = 0;
        for (const VertexState& s : states) total += s.max_len();
        stats->tuples_released(total);
    }
    return w;
}

}  // namespace lcais
