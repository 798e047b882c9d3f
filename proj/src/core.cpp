#include "lcais/core.hpp"

#include <algorithm>

namespace lcais {

std::vector<Value> Witness::values() const {
    std::vector<Value> out;
    out.reserve(entries.size());
    for (const WitnessEntry& e : entries) out.push_back(e.value);
    return out;
}

bool is_almost_increasing(std::span<const Value> s, Delta delta) {
    if (s.size() < 2) return true;
    Value prefix_max = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] + delta.value() <= prefix_max) return false;
        prefix_max = std::max(prefix_max, s[i]);
    }
    return true;
}

bool is_subsequence(std::span<const Value> s, std::span<const Value> a) {
    std::size_t pos = 0;
    for (Value v : s) {
        while (pos < a.size() && a[pos] != v) ++pos;
        if (pos == a.size()) return false;
        ++pos;
    }
    return true;
}

std::optional<WitnessFault> find_witness_fault(const Witness& w, std::span<const Value> a,
                                               std::span<const Value> b, Delta delta) {
    const auto n = static_cast<Index>(a.size());
    const auto m = static_cast<Index>(b.size());
    Value prefix_max = 0;
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        const WitnessEntry& e = w.entries[i];
        if (e.a_index < 1 || e.a_index > n)
            return WitnessFault{WitnessFaultKind::IndexRange, i,
                                "a_index " + std::to_string(e.a_index) + " outside 1.." + std::to_string(n)};
        if (e.b_index < 1 || e.b_index > m)
            return WitnessFault{WitnessFaultKind::IndexRange, i,
                                "b_index " + std::to_string(e.b_index) + " outside 1.." + std::to_string(m)};
        if (i > 0) {
            const WitnessEntry& prev = w.entries[i - 1];
            if (e.a_index <= prev.a_index)
                return WitnessFault{WitnessFaultKind::IndexOrder, i, "a_index not strictly increasing"};
            if (e.b_index <= prev.b_index)
                return WitnessFault{WitnessFaultKind::IndexOrder, i, "b_index not strictly increasing"};
        }
        if (a[static_cast<std::size_t>(e.a_index) - 1] != e.value)
            return WitnessFault{WitnessFaultKind::ValueMismatch, i, "value differs from A at a_index"};
        if (b[static_cast<std::size_t>(e.b_index) - 1] != e.value)
            return WitnessFault{WitnessFaultKind::ValueMismatch, i, "value differs from B at b_index"};
        if (i > 0 && e.value + delta.value() <= prefix_max)
            return WitnessFault{WitnessFaultKind::AlmostIncreasing, i,
                                "value " + std::to_string(e.value) + " + delta does not exceed prefix max " +
                                    std::to_string(prefix_max)};
        prefix_max = (i == 0) ? e.value : std::max(prefix_max, e.value);
    }
    return std::nullopt;
}

namespace {

// Leftmost embedding positions of vals into seq, or empty-and-false on failure.
bool greedy_embed(std::span<const Value> vals, std::span<const Value> seq, std::vector<Index>& out) {
    out.clear();
    std::size_t pos = 0;
    for (Value v : vals) {
        while (pos < seq.size() && seq[pos] != v) ++pos;
        if (pos == seq.size()) return false;
        out.push_back(static_cast<Index>(pos + 1));
        ++pos;
    }
    return true;
}

}  // namespace

Witness brute_force_lcais(std::span<const Value> a, std::span<const Value> b, Delta delta) {
    const bool b_shorter = b.size() <= a.size();
    const std::span<const Value> shorter = b_shorter ? b : a;
    const std::span<const Value> longer = b_shorter ? a : b;
    if (shorter.size() > kBruteForceLimit)
        throw InstanceTooLarge("brute force rejects min(n, m) > " + std::to_string(kBruteForceLimit));

    const std::size_t k = shorter.size();
    std::vector<Value> vals;
    std::vector<Index> subset_idx, embed_idx;
    std::vector<Value> best_vals;
    std::vector<Index> best_a, best_b;
    bool have_best = false;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        vals.clear();
        subset_idx.clear();
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) {
                vals.push_back(shorter[i]);
                subset_idx.push_back(static_cast<Index>(i + 1));
            }
        }
        if (have_best && vals.size() < best_vals.size()) continue;
        if (!is_almost_increasing(vals, delta)) continue;
        if (!greedy_embed(vals, longer, embed_idx)) continue;
        const std::vector<Index>& b_idx = b_shorter ? subset_idx : embed_idx;
        const std::vector<Index>& a_idx = b_shorter ? embed_idx : subset_idx;
        if (!have_best || vals.size() > best_vals.size() ||
            (vals.size() == best_vals.size() && b_idx < best_b)) {
            best_vals = vals;
            best_a = a_idx;
            best_b = b_idx;
            have_best = true;
        }
    }

    Witness w;
    w.entries.reserve(best_vals.size());
    for (std::size_t i = 0; i < best_vals.size(); ++i)
        w.entries.push_back({best_vals[i], best_a[i], best_b[i]});
    return w;
}

}  // namespace lcais
