#include <doctest.h>

#include <algorithm>

#include "lcais/match_index.hpp"
#include "oracles.hpp"

using namespace lcais;
using namespace lcais::testing;

namespace {

std::vector<MatchPair> random_points(SplitMix64& rng, std::size_t count, Index span) {
    // unique (b, a) coordinates, as produced by compute_matches
    std::vector<std::pair<Index, Index>> coords;
    while (coords.size() < count) {
        const Index b = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(span)));
        const Index a = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(span)));
        coords.emplace_back(b, a);
    }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    std::vector<MatchPair> pts;
    for (const auto& [b, a] : coords) pts.push_back({a, b, 0});
    return pts;
}

std::vector<MatchPair> sorted_by_coords(std::vector<MatchPair> v) {
    std::sort(v.begin(), v.end(), [](const MatchPair& x, const MatchPair& y) {
        return std::pair{x.b_index, x.a_index} < std::pair{y.b_index, y.a_index};
    });
    return v;
}

}  // namespace

TEST_CASE("compute_matches ordering and counts") {
    CHECK(compute_matches(table1_a(), table1_b()).size() == 12);

    const auto two = compute_matches(Sequence{1, 2}, Sequence{2, 1});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == MatchPair{2, 1, 2});
    CHECK(two[1] == MatchPair{1, 2, 1});

    const auto dup = compute_matches(Sequence{7, 7}, Sequence{7});
    REQUIRE(dup.size() == 2);
    CHECK(dup[0] == MatchPair{1, 1, 7});
    CHECK(dup[1] == MatchPair{2, 1, 7});
}

TEST_CASE("compute_matches is exactly the brute-force pair set") {
    SplitMix64 rng(0x41);
    for (int t = 0; t < 200; ++t) {
        const Sequence a = random_sequence(rng, 12, 0, 4);
        const Sequence b = random_sequence(rng, 12, 0, 4);
        const auto got = compute_matches(a, b);
        std::vector<MatchPair> want;
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] == b[k])
                    want.push_back({static_cast<Index>(i + 1), static_cast<Index>(k + 1), b[k]});
        CHECK(got == want);  // already (b, a)-ordered with no duplicates
        CHECK(std::is_sorted(got.begin(), got.end(), [](const MatchPair& x, const MatchPair& y) {
            return std::pair{x.b_index, x.a_index} < std::pair{y.b_index, y.a_index};
        }));
    }
}

TEST_CASE("dominance queries on hand-checked points") {
    const std::vector<MatchPair> pts = {{3, 1, 0}, {2, 2, 0}, {1, 3, 0}};  // (b, a) = (1,3),(2,2),(3,1)
    const DominanceIndex idx(pts);
    CHECK(idx.size() == 3);
    const auto hits = idx.dominating_pairs(MatchPair{1, 1, 0});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == MatchPair{2, 2, 0});
    CHECK(idx.dominating_pairs(MatchPair{3, 3, 0}).empty());
}

TEST_CASE("dominance on degenerate indexes") {
    const DominanceIndex empty(std::vector<MatchPair>{});
    CHECK(empty.dominating_pairs(MatchPair{1, 1, 0}).empty());
    CHECK(empty.count_dominating(0, 0) == 0);

    const DominanceIndex single(std::vector<MatchPair>{{2, 3, 0}});
    CHECK(single.dominating_pairs(MatchPair{1, 1, 0}).size() == 1);
    CHECK(single.dominating_pairs(MatchPair{2, 3, 0}).empty());
    CHECK(single.dominating_pairs(MatchPair{1, 3, 0}).empty());
}

TEST_CASE("dominance queries match the brute-force filter") {
    SplitMix64 rng(0x42);
    // exhaustive probes on small sets
    for (int t = 0; t < 50; ++t) {
        const auto pts = random_points(rng, 1 + rng.below(12), 6);
        const DominanceIndex idx(pts);
        for (Index b = 0; b <= 7; ++b) {
            for (Index a = 0; a <= 7; ++a) {
                auto got = sorted_by_coords(idx.dominating_pairs(MatchPair{a, b, 0}));
                auto want = sorted_by_coords(brute_dominating(pts, b, a));
                REQUIRE(got == want);
                REQUIRE(idx.count_dominating(b, a) == want.size());
            }
        }
    }
    // randomized probes on larger sets
    for (int t = 0; t < 20; ++t) {
        const auto pts = random_points(rng, 100 + rng.below(401), 60);
        const DominanceIndex idx(pts);
        for (int probe = 0; probe < 50; ++probe) {
            const Index b = static_cast<Index>(rng.below(62));
            const Index a = static_cast<Index>(rng.below(62));
            auto got = sorted_by_coords(idx.dominating_pairs(MatchPair{a, b, 0}));
            auto want = sorted_by_coords(brute_dominating(pts, b, a));
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("compatible pair counts") {
    const auto p1 = compute_matches(Sequence{1, 2}, Sequence{1, 2});
    CHECK(count_compatible_pairs(p1) == 1);
    const auto p2 = compute_matches(Sequence{1, 2}, Sequence{2, 1});
    CHECK(count_compatible_pairs(p2) == 0);
    const auto table1 = compute_matches(table1_a(), table1_b());
    CHECK(count_compatible_pairs(table1) == brute_compatible_count(table1));
}

TEST_CASE("compatible count agrees with the double loop") {
    SplitMix64 rng(0x43);
    for (int t = 0; t < 100; ++t) {
        const Sequence a = random_sequence(rng, 20, 0, 4);
        const Sequence b = random_sequence(rng, 20, 0, 4);
        const auto pairs = compute_matches(a, b);
        CHECK(count_compatible_pairs(pairs) == brute_compatible_count(pairs));
    }
}

TEST_CASE("query counter counts one query per probe") {
    const auto pairs = compute_matches(table1_a(), table1_b());
    const DominanceIndex idx(pairs);
    StatsRecord stats;
    for (const MatchPair& p : idx.points()) (void)idx.dominating_pairs(p, &stats);
    CHECK(stats.range_queries == idx.size());
}
