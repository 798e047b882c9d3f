#include <doctest.h>

#include "lcais/core.hpp"
#include "oracles.hpp"

using namespace lcais;
using namespace lcais::testing;

TEST_CASE("is_almost_increasing on the definition's cases") {
    CHECK(is_almost_increasing(Sequence{}, Delta(3)));
    CHECK(is_almost_increasing(Sequence{3, 1, 2, 1}, Delta(3)));
    CHECK_FALSE(is_almost_increasing(Sequence{5, 1}, Delta(3)));
    CHECK(is_almost_increasing(Sequence{1, 2, 3}, Delta(0)));
    CHECK_FALSE(is_almost_increasing(Sequence{1, 1}, Delta(0)));
    CHECK(is_almost_increasing(Sequence{42}, Delta(0)));
}

TEST_CASE("delta must be non-negative") {
    CHECK_THROWS_AS(Delta(-1), std::invalid_argument);
}

TEST_CASE("prefix-max scan agrees with the pairwise form") {
    SplitMix64 rng(0x11);
    for (int t = 0; t < 600; ++t) {
        const Sequence s = random_sequence(rng, 12, -5, 5);
        const Value d = static_cast<Value>(rng.below(6));
        CHECK(is_almost_increasing(s, Delta(d)) == almost_increasing_pairwise(s, d));
    }
}

TEST_CASE("almost-increasing is hereditary under deletion") {
    SplitMix64 rng(0x12);
    int covered = 0;
    while (covered < 500) {
        const Sequence s = random_sequence(rng, 8, 0, 7);
        const Value d = static_cast<Value>(rng.below(7));
        if (!is_almost_increasing(s, Delta(d)) || s.empty()) continue;
        ++covered;
        Sequence t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(rng.below(t.size())));
        CHECK(is_almost_increasing(t, Delta(d)));
    }
}

TEST_CASE("is_subsequence") {
    const Sequence a = table1_a();
    CHECK(is_subsequence(Sequence{3, 1, 2, 1}, a));
    CHECK(is_subsequence(Sequence{}, a));
    CHECK(is_subsequence(Sequence{}, Sequence{}));
    CHECK_FALSE(is_subsequence(Sequence{2, 3}, Sequence{3, 2}));
}

TEST_CASE("validate_witness") {
    const Sequence a = table1_a();
    const Sequence b = table1_b();
    Witness w;
    w.entries = {{3, 1, 3}, {1, 2, 4}, {2, 5, 5}, {1, 8, 8}};
    CHECK(validate_witness(w, a, b, Delta(3)));
    CHECK(validate_witness(Witness{}, a, b, Delta(3)));
    CHECK(validate_witness(Witness{}, Sequence{}, Sequence{}, Delta(0)));

    // Both entries are individually fine; swapping them breaks monotonicity.
    Witness good;
    good.entries = {{4, 3, 1}, {2, 5, 2}};
    CHECK(validate_witness(good, a, b, Delta(3)));
    Witness swapped;
    swapped.entries = {{2, 5, 2}, {4, 3, 1}};
    const auto fault = find_witness_fault(swapped, a, b, Delta(3));
    REQUIRE(fault.has_value());
    CHECK(fault->kind == WitnessFaultKind::IndexOrder);

    Witness bad_value;
    bad_value.entries = {{9, 1, 3}};
    CHECK(find_witness_fault(bad_value, a, b, Delta(3))->kind == WitnessFaultKind::ValueMismatch);

    Witness bad_ai;
    bad_ai.entries = {{3, 1, 3}, {1, 2, 4}, {5, 4, 6}};
    CHECK(find_witness_fault(bad_ai, a, b, Delta(0))->kind == WitnessFaultKind::AlmostIncreasing);

    Witness bad_range;
    bad_range.entries = {{3, 9, 3}};
    CHECK(find_witness_fault(bad_range, a, b, Delta(3))->kind == WitnessFaultKind::IndexRange);
}

TEST_CASE("brute force on the worked instance") {
    const Witness w = brute_force_lcais(table1_a(), table1_b(), Delta(3));
    CHECK(w.length() == 4);
    CHECK(validate_witness(w, table1_a(), table1_b(), Delta(3)));
}

TEST_CASE("brute force edge cases") {
    CHECK(brute_force_lcais(Sequence{1, 2, 3}, Sequence{}, Delta(1)).length() == 0);
    const Witness w = brute_force_lcais(Sequence{3, 1, 2}, Sequence{1, 2, 3}, Delta(0));
    CHECK(w.length() == 2);
    CHECK(w.values() == std::vector<Value>{1, 2});
}

TEST_CASE("brute force rejects oversized instances") {
    const Sequence big(kBruteForceLimit + 1, 1);
    CHECK_THROWS_AS(brute_force_lcais(big, big, Delta(1)), InstanceTooLarge);
    // only min(n, m) matters
    const Sequence small(3, 1);
    CHECK_NOTHROW(brute_force_lcais(big, small, Delta(1)));
}

TEST_CASE("brute force tie-break picks the smallest b-index sequence") {
    const Witness w = brute_force_lcais(Sequence{7}, Sequence{7, 7}, Delta(0));
    REQUIRE(w.length() == 1);
    CHECK(w.entries[0].b_index == 1);
}

TEST_CASE("delta-monotonicity of the oracle") {
    SplitMix64 rng(0x13);
    for (int t = 0; t < 500; ++t) {
        const Sequence a = random_sequence(rng, 8, 0, 7);
        const Sequence b = random_sequence(rng, 8, 0, 7);
        const Value d1 = static_cast<Value>(rng.below(4));
        const Value d2 = d1 + static_cast<Value>(rng.below(4));
        CHECK(brute_force_lcais(a, b, Delta(d1)).length() <=
              brute_force_lcais(a, b, Delta(d2)).length());
    }
}

TEST_CASE("argument symmetry and reverse-negate invariance of the oracle") {
    SplitMix64 rng(0x14);
    for (int t = 0; t < 500; ++t) {
        const Sequence a = random_sequence(rng, 8, 0, 7);
        const Sequence b = random_sequence(rng, 8, 0, 7);
        const Value d = static_cast<Value>(rng.below(4));
        const std::size_t len = brute_force_lcais(a, b, Delta(d)).length();
        CHECK(brute_force_lcais(b, a, Delta(d)).length() == len);
        Sequence ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
        for (Value& v : ra) v = -v;
        for (Value& v : rb) v = -v;
        CHECK(brute_force_lcais(ra, rb, Delta(d)).length() == len);
    }
}

TEST_CASE("LCS bounds the oracle from above; equality for huge delta") {
    SplitMix64 rng(0x15);
    for (int t = 0; t < 500; ++t) {
        const Sequence a = random_sequence(rng, 8, 0, 7);
        const Sequence b = random_sequence(rng, 8, 0, 7);
        const Value d = static_cast<Value>(rng.below(4));
        const std::size_t lcs_len = lcs_quadratic(a, b);
        CHECK(brute_force_lcais(a, b, Delta(d)).length() <= lcs_len);
        CHECK(brute_force_lcais(a, b, Delta(8)).length() == lcs_len);  // 8 > max-min
    }
}
