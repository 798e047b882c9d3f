#pragma once

#include "lcais/core.hpp"

namespace lcais {

// values[j] = LCS length of all of A and B[1..j], for j = 0..m.
using LcsRow = std::vector<Index>;

// Final row of the LCS table computed with two rolling rows; peak auxiliary
// space proportional to m.
LcsRow compute_l(std::span<const Value> a, std::span<const Value> b, StatsRecord* stats = nullptr);

// Maximum-length common subsequence via linear-space divide and conquer:
// split A at n/2, combine the forward row with a row over reversed suffixes,
// recurse on the two halves. Delta plays no role here.
Witness lcs(std::span<const Value> a, std::span<const Value> b, StatsRecord* stats = nullptr);

}  // namespace lcais
