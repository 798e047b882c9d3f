#include "lcais/dense.hpp"

#include <algorithm>
#include <cassert>

namespace lcais {

namespace {

// Per-outer-iteration aggregation over the lists L[1..j-1]. current(r) marks
// that some earlier list holds an engaged length-r entry whose bound q passed
// the guard a_i + delta > q; min_elem(r) is the smallest such q. Slot 0 stands
// for the empty prefix: always current, min element unbounded below.
class ScanState {
public:
    ScanState(std::size_t attempt_new_max, StatsRecord* stats) : lease_(stats) {
        lease_.grow(attempt_new_max + 1);
        min_elem_.resize(attempt_new_max + 1);
        current_.assign(attempt_new_max + 1, false);
        current_[0] = true;
    }

    bool current(std::size_t r) const { return current_[r]; }

    void fold(std::size_t r, Value q) {
        current_[r] = true;
        std::optional<Value>& slot = min_elem_[r];
        slot = slot ? std::min(*slot, q) : q;
    }

    // max(a_i, min_elem(r)); the absent slot 0 acts as -infinity.
    Value extend_candidate(std::size_t r, Value a_i) const {
        const std::optional<Value>& me = min_elem_[r];
        return me ? std::max(a_i, *me) : a_i;
    }

private:
    std::vector<bool> current_;
    std::vector<std::optional<Value>> min_elem_;
    CellLease lease_;
};

}  // namespace

DenseScan minimize_largest_elem(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                StatsRecord* stats, const IterationObserver& observer) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();

    std::vector<TupleRow> rows;
    rows.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j) rows.emplace_back(stats);

    std::size_t current_max = 0;
    std::vector<std::optional<Value>> snapshot;

    for (std::size_t i = 1; i <= n; ++i) {
        const Value ai = a[i - 1];
        const std::size_t attempt = current_max + 1;
        ScanState scan(attempt, stats);

        for (std::size_t j = 1; j <= m; ++j) {
            if (stats) stats->inner_steps += attempt + 1;
            TupleRow& row = rows[j];

            // Snapshot the entries from iteration i-1 before the match step
            // can touch this row: only those may feed the scan state, or a
            // value of A[i] occurring twice in B would be matched twice.
            const std::size_t old_width = row.width();
            snapshot.resize(old_width);
            for (std::size_t r = 1; r < old_width; ++r) snapshot[r] = row.entry(r);

            if (ai == b[j - 1]) {
                for (std::size_t r = 0; r < attempt; ++r) {
                    if (!scan.current(r)) continue;
                    row.engage_min(r + 1, scan.extend_candidate(r, ai));
                    if (r + 1 > current_max) current_max = r + 1;
                }
            }

            // Fold the snapshot into the scan state. The guard applies in
            // both branches; for delta = 0 an unguarded fold at a matching
            // position would admit equal consecutive values.
            for (std::size_t r = 1; r < old_width; ++r) {
                if (!snapshot[r]) continue;
                const Value q = *snapshot[r];
                if (ai + delta.value() > q) scan.fold(r, q);
            }
        }

        if (observer) observer(i, std::span<const TupleRow>(rows));
    }

    PrefixTables prefix(m + 1, current_max + 1, stats);
    std::vector<std::optional<Value>> running(current_max + 1);
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t r = 1; r <= current_max; ++r) {
            if (const std::optional<Value> e = rows[j].entry(r)) {
                std::optional<Value>& run = running[r];
                run = run ? std::min(*run, *e) : *e;
            }
            if (running[r]) prefix.engage(j, r, *running[r]);
        }
    }
    return DenseScan{std::move(rows), std::move(prefix)};
}

PrefixTables maximize_smallest_elem(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                    StatsRecord* stats) {
    std::vector<Value> ta, tb;
    ta.reserve(a.size());
    tb.reserve(b.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) ta.push_back(-*it);
    for (auto it = b.rbegin(); it != b.rend(); ++it) tb.push_back(-*it);

    const std::size_t m = b.size();
    PrefixTables transformed = minimize_largest_elem(ta, tb, delta, stats).prefix;
    PrefixTables out(m + 1, transformed.width(), stats);
    for (std::size_t j = 0; j <= m; ++j) {
        // Suffix B[j+1..m] corresponds to the transformed prefix of length m-j.
        for (std::size_t r = 1; r < transformed.width(); ++r)
            if (transformed.exists(m - j, r)) out.engage(j, r, -transformed.bound(m - j, r));
    }
    return out;
}

SplitChoice choose_split(const PrefixTables& fwd, const PrefixTables& bwd, Delta delta,
                         StatsRecord* stats) {
    assert(fwd.positions() == bwd.positions());
    SplitChoice best{0, 0, 0};
    std::size_t best_sum = 0;
    for (std::size_t j = 0; j < fwd.positions(); ++j) {
        for (std::size_t rp = 0; rp < fwd.width(); ++rp) {
            if (!fwd.exists(j, rp)) continue;
            for (std::size_t rs = 0; rs < bwd.width(); ++rs) {
                if (stats) ++stats->inner_steps;
                if (!bwd.exists(j, rs)) continue;
                if (rp != 0 && rs != 0 && bwd.bound(j, rs) + delta.value() <= fwd.bound(j, rp))
                    continue;
                if (rp + rs > best_sum) {
                    best_sum = rp + rs;
                    best = {j, rp, rs};
                }
            }
        }
    }
    return best;
}

namespace {

struct TaggedValue {
    Value value;
    Index b_index;  // position in the caller's original B
};

void dc_rec(std::span<const Value> a, Index a_offset, const std::vector<TaggedValue>& b,
            Delta delta, StatsRecord* stats, std::vector<WitnessEntry>& out) {
    if (stats) ++stats->recursion_calls;
    if (a.empty() || b.empty()) return;
    if (a.size() == 1) {
        for (const TaggedValue& e : b) {
            if (e.value == a[0]) {
                out.push_back({a[0], a_offset + 1, e.b_index});
                return;
            }
        }
        return;
    }

    const std::size_t i = a.size() / 2;
    std::vector<TaggedValue> left, right;
    {
        std::vector<Value> bv;
        bv.reserve(b.size());
        for (const TaggedValue& e : b) bv.push_back(e.value);

        PrefixTables fwd = std::move(minimize_largest_elem(a.first(i), bv, delta, stats).prefix);
        PrefixTables bwd = maximize_smallest_elem(a.subspan(i), bv, delta, stats);
        const SplitChoice split = choose_split(fwd, bwd, delta, stats);

        if (split.r_prefix > 0) {
            const Value cap = fwd.bound(split.j, split.r_prefix);
            for (std::size_t t = 0; t < split.j; ++t)
                if (b[t].value <= cap) left.push_back(b[t]);
        }
        if (split.r_suffix > 0) {
            const Value floor = bwd.bound(split.j, split.r_suffix);
            for (std::size_t t = split.j; t < b.size(); ++t)
                if (b[t].value >= floor) right.push_back(b[t]);
        }
    }  // tables released before recursing

    dc_rec(a.first(i), a_offset, left, delta, stats, out);
    dc_rec(a.subspan(i), a_offset + static_cast<Index>(i), right, delta, stats, out);
}

}  // namespace

Witness lcais_divide_conquer(std::span<const Value> a, std::span<const Value> b, Delta delta,
                             StatsRecord* stats) {
    std::vector<TaggedValue> tagged;
    tagged.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) tagged.push_back({b[j], static_cast<Index>(j + 1)});
    Witness w;
    dc_rec(a, 0, tagged, delta, stats, w.entries);
    return w;
}

ReferenceTables::ReferenceTables(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                 std::uint64_t cell_budget) {
    n_ = a.size();
    m_ = b.size();
    cells_.assign((n_ + 1) * std::max<std::size_t>(m_, 1), {});
    if (m_ == 0) return;

    std::uint64_t used = 0;
    auto at = [&](std::size_t i, std::size_t j) -> std::vector<std::optional<Value>>& {
        return cells_[i * m_ + (j - 1)];
    };
    auto engage = [](std::vector<std::optional<Value>>& slots, std::size_t r, Value v) {
        if (slots.size() <= r) slots.resize(r + 1);
        slots[r] = slots[r] ? std::min(*slots[r], v) : v;
    };

    for (std::size_t i = 1; i <= n_; ++i) {
        const Value ai = a[i - 1];
        for (std::size_t j = 1; j <= m_; ++j) {
            std::vector<std::optional<Value>>& cur = at(i, j);
            if (ai != b[j - 1]) {
                cur = at(i - 1, j);
            } else {
                engage(cur, 1, ai);
                if (longest_ < 1) longest_ = 1;
                for (std::size_t r = 2; r <= longest_ + 1; ++r) {
                    std::optional<Value> best;
                    for (std::size_t k = 1; k < j; ++k) {
                        const std::vector<std::optional<Value>>& pred = at(i - 1, k);
                        if (r - 1 >= pred.size() || !pred[r - 1]) continue;
                        const Value pq = *pred[r - 1];
                        if (ai + delta.value() <= pq) continue;
                        const Value cand = std::max(ai, pq);
                        best = best ? std::min(*best, cand) : cand;
                    }
                    if (best) {
                        engage(cur, r, *best);
                        if (r > longest_) longest_ = r;
                    }
                }
            }
            used += cur.size();
            if (used > cell_budget)
                throw InstanceTooLarge("reference tables exceed the cell budget of " +
                                       std::to_string(cell_budget));
        }
    }
}

ReferenceTables reference_pq_tables(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                    std::uint64_t cell_budget) {
    return ReferenceTables(a, b, delta, cell_budget);
}

Witness lcais_reference(std::span<const Value> a, std::span<const Value> b, Delta delta,
                        std::uint64_t cell_budget) {
    const ReferenceTables t = reference_pq_tables(a, b, delta, cell_budget);
    const std::size_t n = t.n();
    const std::size_t m = t.m();

    std::size_t best_r = t.longest();
    Witness w;
    if (best_r == 0) return w;
    std::size_t j = 0;
    for (std::size_t cand = 1; cand <= m; ++cand) {
        if (t.p(n, cand, best_r)) {
            j = cand;
            break;
        }
    }

    std::vector<WitnessEntry> rev;
    std::size_t i = n;
    std::size_t r = best_r;
    while (true) {
        // Earliest A prefix achieving the current bound; there the entry was
        // produced by matching A[i] = B[j].
        const Value qv = *t.q(i, j, r);
        while (i > 1 && t.p(i - 1, j, r) && *t.q(i - 1, j, r) == qv) --i;
        rev.push_back({b[j - 1], static_cast<Index>(i), static_cast<Index>(j)});
        if (r == 1) break;

        bool found = false;
        for (std::size_t k = 1; k < j; ++k) {
            if (!t.p(i - 1, k, r - 1)) continue;
            const Value pq = *t.q(i - 1, k, r - 1);
            if (a[i - 1] + delta.value() > pq && std::max(a[i - 1], pq) == qv) {
                j = k;
                r = r - 1;
                i = i - 1;
                found = true;
                break;
            }
        }
        assert(found);
        if (!found) throw BrokenChain("reference backtrack found no predecessor");
    }

    std::reverse(rev.begin(), rev.end());
    w.entries = std::move(rev);
    return w;
}

}  // namespace lcais
