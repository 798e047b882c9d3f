#include "lcais/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace lcais {

Dist parse_dist(std::string_view name) {
    if (name == "uniform") return Dist::Uniform;
    if (name == "permutation") return Dist::Permutation;
    if (name == "constant") return Dist::Constant;
    if (name == "blocks") return Dist::Blocks;
    throw std::invalid_argument("unknown distribution: " + std::string(name));
}

std::string_view dist_name(Dist d) {
    switch (d) {
        case Dist::Uniform: return "uniform";
        case Dist::Permutation: return "permutation";
        case Dist::Constant: return "constant";
        case Dist::Blocks: return "blocks";
    }
    return "?";
}

namespace {

Sequence shuffled_iota(std::size_t len, SplitMix64& rng) {
    Sequence s(len);
    std::iota(s.begin(), s.end(), Value{1});
    for (std::size_t i = len; i > 1; --i) {
        const std::size_t k = static_cast<std::size_t>(rng.below(i));
        std::swap(s[i - 1], s[k]);
    }
    return s;
}

Sequence draw(std::size_t len, const GenSpec& spec, SplitMix64& rng) {
    Sequence s;
    s.reserve(len);
    switch (spec.dist) {
        case Dist::Uniform:
            for (std::size_t i = 0; i < len; ++i)
                s.push_back(1 + static_cast<Value>(rng.below(static_cast<std::uint64_t>(spec.sigma))));
            break;
        case Dist::Permutation:
            return shuffled_iota(len, rng);
        case Dist::Constant:
            s.assign(len, spec.sigma);
            break;
        case Dist::Blocks:
            while (s.size() < len) {
                const Value base =
                    1 + static_cast<Value>(rng.below(static_cast<std::uint64_t>(spec.sigma)));
                const std::size_t run = 2 + static_cast<std::size_t>(rng.below(5));
                for (std::size_t t = 0; t < run && s.size() < len; ++t)
                    s.push_back(base + static_cast<Value>(t));
            }
            break;
    }
    return s;
}

}  // namespace

Instance generate(const GenSpec& spec) {
    if (spec.sigma < 1) throw std::invalid_argument("sigma must be at least 1");
    if (spec.dist == Dist::Permutation && static_cast<std::size_t>(spec.sigma) != spec.n)
        throw std::invalid_argument("permutation requires sigma = n");
    SplitMix64 rng(spec.seed);
    Instance inst;
    inst.a = draw(spec.n, spec, rng);
    inst.b = draw(spec.m, spec, rng);
    return inst;
}

}  // namespace lcais
