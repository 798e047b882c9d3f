#pragma once

#include <functional>

#include "lcais/core.hpp"

namespace lcais {

// Per-B-position tuple list of the streaming scan. Slot r is engaged iff a
// length-r almost-increasing common subsequence of the scanned A prefix and
// B[1..j] ending at B[j] exists; the engaged value is the smallest achievable
// largest element. Slot 0 is the empty-prefix sentinel and never engages.
class TupleRow {
public:
    TupleRow() = default;
    explicit TupleRow(StatsRecord* stats) : lease_(stats) { ensure(1); }

    std::size_t width() const { return slots_.size(); }
    std::optional<Value> entry(std::size_t r) const {
        return r < slots_.size() ? slots_[r] : std::nullopt;
    }

    // Engage slot r with candidate, or keep the smaller of the two bounds.
    void engage_min(std::size_t r, Value candidate) {
        ensure(r + 1);
        std::optional<Value>& slot = slots_[r];
        slot = slot ? std::min(*slot, candidate) : candidate;
    }

private:
    void ensure(std::size_t width) {
        if (slots_.size() < width) {
            lease_.grow(width - slots_.size());
            slots_.resize(width);
        }
    }

    std::vector<std::optional<Value>> slots_;
    CellLease lease_;
};

// Aggregated existence/bound tables over all of A and a growing range of B.
// Forward tables: row j covers B[1..j] and bound() is the minimized largest
// element. Backward tables: row j covers B[j+1..m] and bound() is the
// maximized smallest element. Row entry r = 0 always exists; its bound is the
// unbounded sentinel and must not be read.
class PrefixTables {
public:
    PrefixTables(std::size_t positions, std::size_t width, StatsRecord* stats)
        : positions_(positions), width_(width), lease_(stats) {
        lease_.grow(positions_ * width_);
        cells_.resize(positions_ * width_);
    }

    std::size_t positions() const { return positions_; }
    std::size_t width() const { return width_; }

    bool exists(std::size_t j, std::size_t r) const {
        if (r == 0) return true;
        return r < width_ && cells_[j * width_ + r].has_value();
    }
    Value bound(std::size_t j, std::size_t r) const { return *cells_[j * width_ + r]; }

    void engage(std::size_t j, std::size_t r, Value v) { cells_[j * width_ + r] = v; }

private:
    std::size_t positions_;
    std::size_t width_;
    std::vector<std::optional<Value>> cells_;
    CellLease lease_;
};

struct DenseScan {
    std::vector<TupleRow> rows;  // index 1..m; rows[0] stays sentinel-only
    PrefixTables prefix;
};

// Invoked after each outer iteration i with the current tuple rows; used by
// invariant tests.
using IterationObserver = std::function<void(std::size_t i, std::span<const TupleRow> rows)>;

// Streaming forward scan: one tuple list per B position plus one scan state,
// no full table. prefix holds X'/Y' aggregated over B prefixes.
DenseScan minimize_largest_elem(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                StatsRecord* stats = nullptr,
                                const IterationObserver& observer = {});

// Suffix tables X''/Y'' via the reverse-negate transformation: the pairwise
// form of the almost-increasing condition is invariant under reversing both
// sequences and negating every element.
PrefixTables maximize_smallest_elem(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                    StatsRecord* stats = nullptr);

struct SplitChoice {
    std::size_t j;         // B split position, 0..m
    std::size_t r_prefix;  // solved length on A[1..i], B[1..j]
    std::size_t r_suffix;  // solved length on A[i+1..n], B[j+1..m]
};

// Best concatenation point: maximizes r' + r'' over rows where both tables
// engage and the suffix bound plus delta clears the prefix bound. Sentinel
// rows r = 0 make the guard vacuous, so (j, 0, 0) is always feasible.
// Ties: smallest j, then smallest r'.
SplitChoice choose_split(const PrefixTables& fwd, const PrefixTables& bwd, Delta delta,
                         StatsRecord* stats = nullptr);

// Full solver: recursive bisection of A, table builds on both halves,
// choose_split, B filtered by the chosen bounds, recurse, concatenate.
Witness lcais_divide_conquer(std::span<const Value> a, std::span<const Value> b, Delta delta,
                             StatsRecord* stats = nullptr);

// Unoptimized evaluation of the full three-dimensional recurrences over every
// (i, j, r): the mid-scale oracle the streaming scan is validated against.
class ReferenceTables {
public:
    ReferenceTables(std::span<const Value> a, std::span<const Value> b, Delta delta,
                    std::uint64_t cell_budget);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }

    // Existence of a length-r subsequence of A[1..i] and B[1..j] ending at
    // B[j] (i in 0..n, j in 1..m, r >= 1), and its minimized largest element.
    bool p(std::size_t i, std::size_t j, std::size_t r) const {
        const auto& slots = cells_[i * m_ + (j - 1)];
        return r < slots.size() && slots[r].has_value();
    }
    std::optional<Value> q(std::size_t i, std::size_t j, std::size_t r) const {
        const auto& slots = cells_[i * m_ + (j - 1)];
        return r < slots.size() ? slots[r] : std::nullopt;
    }

    std::size_t longest() const { return longest_; }

private:
    std::size_t n_ = 0, m_ = 0;
    std::size_t longest_ = 0;
    std::vector<std::vector<std::optional<Value>>> cells_;  // [(i, j)] -> slots by r
};

inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

ReferenceTables reference_pq_tables(std::span<const Value> a, std::span<const Value> b, Delta delta,
                                    std::uint64_t cell_budget = kDefaultCellBudget);

// Witness by backtracking through the reference tables (the dp3 solver).
Witness lcais_reference(std::span<const Value> a, std::span<const Value> b, Delta delta,
                        std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace lcais
