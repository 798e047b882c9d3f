#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcais {

using Value = std::int64_t;
using Index = std::int64_t;  // 1-based positions in input sequences
using Sequence = std::vector<Value>;

// Non-negative slack of the almost-increasing condition: every element plus
// delta must strictly exceed the maximum of all earlier elements. delta = 0
// degenerates to strictly increasing.
class Delta {
public:
    explicit Delta(Value v) : value_(v) {
        if (v < 0) throw std::invalid_argument("delta must be non-negative");
    }
    Value value() const { return value_; }

private:
    Value value_;
};

struct WitnessEntry {
    Value value;
    Index a_index;  // 1-based position in A
    Index b_index;  // 1-based position in B

    friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

// A fully positioned solution candidate: the object every solver returns and
// every validator checks.
struct Witness {
    std::vector<WitnessEntry> entries;

    std::size_t length() const { return entries.size(); }
    std::vector<Value> values() const;

    friend bool operator==(const Witness&, const Witness&) = default;
};

class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by witness reconstruction when parent links are inconsistent.
// Indicates an internal bug, never expected on valid solver state.
class BrokenChain : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Instrumentation counters. Counters only ever grow during a solve; the live
// tuple gauge is internal bookkeeping feeding live_tuples_peak.
class StatsRecord {
public:
    std::uint64_t inner_steps = 0;
    std::uint64_t live_tuples_peak = 0;
    std::uint64_t edges_relaxed = 0;
    std::uint64_t range_queries = 0;
    std::uint64_t recursion_calls = 0;

    void tuples_acquired(std::uint64_t k) {
        live_tuples_ += k;
        if (live_tuples_ > live_tuples_peak) live_tuples_peak = live_tuples_;
    }
    void tuples_released(std::uint64_t k) { live_tuples_ -= k; }
    std::uint64_t live_tuples() const { return live_tuples_; }

private:
    std::uint64_t live_tuples_ = 0;
};

// RAII share of the live-cell gauge held by a container of DP cells. Move-only
// so ownership follows the container.
class CellLease {
public:
    CellLease() = default;
    explicit CellLease(StatsRecord* stats) : stats_(stats) {}
    CellLease(const CellLease&) = delete;
    CellLease& operator=(const CellLease&) = delete;
    CellLease(CellLease&& other) noexcept : stats_(other.stats_), held_(other.held_) {
        other.stats_ = nullptr;
        other.held_ = 0;
    }
    CellLease& operator=(CellLease&& other) noexcept {
        if (this != &other) {
            release();
            stats_ = other.stats_;
            held_ = other.held_;
            other.stats_ = nullptr;
            other.held_ = 0;
        }
        return *this;
    }
    ~CellLease() { release(); }

    void grow(std::uint64_t k) {
        held_ += k;
        if (stats_) stats_->tuples_acquired(k);
    }

private:
    void release() {
        if (stats_ && held_ > 0) stats_->tuples_released(held_);
        held_ = 0;
    }

    StatsRecord* stats_ = nullptr;
    std::uint64_t held_ = 0;
};

// True iff every element plus delta strictly exceeds the maximum of all
// earlier elements. Empty and singleton sequences pass vacuously.
bool is_almost_increasing(std::span<const Value> s, Delta delta);

// True iff s embeds left-to-right into a preserving order.
bool is_subsequence(std::span<const Value> s, std::span<const Value> a);

enum class WitnessFaultKind {
    IndexRange,        // an index lies outside its sequence
    IndexOrder,        // a_index or b_index not strictly increasing
    ValueMismatch,     // entry value differs from A[a_index] or B[b_index]
    AlmostIncreasing,  // value + delta does not exceed an earlier value
};

struct WitnessFault {
    WitnessFaultKind kind;
    std::size_t entry;  // 0-based offending entry
    std::string detail;
};

// Diagnostic check of every witness invariant against A, B and delta.
// Returns the first violated invariant, or nullopt for a valid witness.
std::optional<WitnessFault> find_witness_fault(const Witness& w, std::span<const Value> a,
                                               std::span<const Value> b, Delta delta);

inline bool validate_witness(const Witness& w, std::span<const Value> a,
                             std::span<const Value> b, Delta delta) {
    return !find_witness_fault(w, a, b, delta).has_value();
}

// Enumeration cutoff: instances with min(n, m) above this are rejected.
inline constexpr std::size_t kBruteForceLimit = 22;

// Desk-scale oracle. Enumerates all subsequences of the shorter sequence,
// keeps the longest valid witness, ties broken by lexicographically smallest
// b-index sequence. Throws InstanceTooLarge past kBruteForceLimit.
Witness brute_force_lcais(std::span<const Value> a, std::span<const Value> b, Delta delta);

}  // namespace lcais
