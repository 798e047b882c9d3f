#pragma once

#include <cstdint>
#include <string_view>

#include "lcais/core.hpp"

namespace lcais {

// Fixed-increment 64-bit mix generator. Fully specified arithmetic, so seeded
// output is identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

enum class Dist { Uniform, Permutation, Constant, Blocks };

Dist parse_dist(std::string_view name);  // throws std::invalid_argument
std::string_view dist_name(Dist d);

struct GenSpec {
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t sigma = 1;  // alphabet size; the value itself for constant
    Dist dist = Dist::Uniform;
    std::uint64_t seed = 0;
};

struct Instance {
    Sequence a;
    Sequence b;
};

// Deterministic for a fixed spec: A is drawn first, then B from the same
// stream. permutation requires sigma = n and yields A as a shuffle of 1..n
// and B of 1..m; constant fills both sequences with sigma; blocks
// concatenates short increasing runs starting in [1, sigma].
Instance generate(const GenSpec& spec);  // throws std::invalid_argument

}  // namespace lcais
