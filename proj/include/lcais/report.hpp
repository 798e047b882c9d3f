#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lcais/core.hpp"
#include "lcais/dense.hpp"
#include "lcais/generate.hpp"

namespace lcais {

enum class Algo { Brute, Dp3, Dc, Sparse };

Algo parse_algo(std::string_view name);  // throws std::invalid_argument
std::string_view algo_name(Algo a);

Witness run_solver(Algo algo, std::span<const Value> a, std::span<const Value> b, Delta delta,
                   StatsRecord* stats = nullptr, std::uint64_t dp3_cell_budget = kDefaultCellBudget);

struct SolveReport {
    std::string algo;
    std::size_t n = 0;
    std::size_t m = 0;
    Value delta = 0;
    std::size_t length = 0;
    Witness witness;
    std::uint64_t match_count = 0;       // M
    std::uint64_t compatible_count = 0;  // C
    StatsRecord stats;
    double wall_millis = 0.0;
    bool verified = false;
};

// Solve plus instance statistics; verification is the caller's concern.
SolveReport make_report(Algo algo, std::span<const Value> a, std::span<const Value> b, Delta delta,
                        std::uint64_t dp3_cell_budget = kDefaultCellBudget);

std::string report_to_text(const SolveReport& r);
std::string report_to_json(const SolveReport& r);
SolveReport report_from_json(std::string_view text);  // throws std::runtime_error

struct BenchEntry {
    GenSpec gen;
    Value delta = 0;
    std::vector<Algo> algos;
    int reps = 1;
};

inline constexpr std::string_view kBenchCsvHeader =
    "n,m,delta,sigma,M,C,ell,algo,inner_steps,edges_relaxed,live_tuples_peak,wall_millis";

// Spec file: a JSON object {"entries": [...]} where each entry carries
// n, m, sigma, dist, seed, delta, algos and optional reps; top-level keys of
// the same names act as defaults.
std::vector<BenchEntry> parse_bench_spec(std::string_view text);

// One CSV row per (entry, rep, algo); identical counters across reps of the
// same seeded entry, only wall_millis varies.
void run_bench(const std::vector<BenchEntry>& entries, std::ostream& out);

}  // namespace lcais
