#include "lcais/report.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lcais/sparse.hpp"

namespace lcais {

Algo parse_algo(std::string_view name) {
    if (name == "brute") return Algo::Brute;
    if (name == "dp3") return Algo::Dp3;
    if (name == "dc") return Algo::Dc;
    if (name == "sparse") return Algo::Sparse;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view algo_name(Algo a) {
    switch (a) {
        case Algo::Brute: return "brute";
        case Algo::Dp3: return "dp3";
        case Algo::Dc: return "dc";
        case Algo::Sparse: return "sparse";
    }
    return "?";
}

Witness run_solver(Algo algo, std::span<const Value> a, std::span<const Value> b, Delta delta,
                   StatsRecord* stats, std::uint64_t dp3_cell_budget) {
    switch (algo) {
        case Algo::Brute: return brute_force_lcais(a, b, delta);
        case Algo::Dp3: return lcais_reference(a, b, delta, dp3_cell_budget);
        case Algo::Dc: return lcais_divide_conquer(a, b, delta, stats);
        case Algo::Sparse: return sparse_lcais(a, b, delta, stats);
    }
    throw std::logic_error("unreachable");
}

SolveReport make_report(Algo algo, std::span<const Value> a, std::span<const Value> b, Delta delta,
                        std::uint64_t dp3_cell_budget) {
    SolveReport r;
    r.algo = algo_name(algo);
    r.n = a.size();
    r.m = b.size();
    r.delta = delta.value();

    const auto t0 = std::chrono::steady_clock::now();
    r.witness = run_solver(algo, a, b, delta, &r.stats, dp3_cell_budget);
    const auto t1 = std::chrono::steady_clock::now();
    r.wall_millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.length = r.witness.length();

    const std::vector<MatchPair> pairs = compute_matches(a, b);
    r.match_count = pairs.size();
    r.compatible_count = count_compatible_pairs(pairs);
    return r;
}

std::string report_to_text(const SolveReport& r) {
    std::ostringstream out;
    out << "algo: " << r.algo << '\n';
    out << "n: " << r.n << "  m: " << r.m << "  delta: " << r.delta << '\n';
    out << "length: " << r.length << '\n';
    out << "witness values:";
    for (const WitnessEntry& e : r.witness.entries) out << ' ' << e.value;
    out << '\n';
    out << "witness a-indices:";
    for (const WitnessEntry& e : r.witness.entries) out << ' ' << e.a_index;
    out << '\n';
    out << "witness b-indices:";
    for (const WitnessEntry& e : r.witness.entries) out << ' ' << e.b_index;
    out << '\n';
    out << "M: " << r.match_count << "  C: " << r.compatible_count << '\n';
    out << "inner_steps: " << r.stats.inner_steps << "  edges_relaxed: " << r.stats.edges_relaxed
        << "  live_tuples_peak: " << r.stats.live_tuples_peak
        << "  range_queries: " << r.stats.range_queries
        << "  recursion_calls: " << r.stats.recursion_calls << '\n';
    out << "wall_millis: " << r.wall_millis << '\n';
    out << "verified: " << (r.verified ? "yes" : "no") << '\n';
    return std::move(out).str();
}

std::string report_to_json(const SolveReport& r) {
    nlohmann::json w;
    w["values"] = nlohmann::json::array();
    w["a_indices"] = nlohmann::json::array();
    w["b_indices"] = nlohmann::json::array();
    for (const WitnessEntry& e : r.witness.entries) {
        w["values"].push_back(e.value);
        w["a_indices"].push_back(e.a_index);
        w["b_indices"].push_back(e.b_index);
    }
    const nlohmann::json j{{"algo", r.algo},
                           {"n", r.n},
                           {"m", r.m},
                           {"delta", r.delta},
                           {"length", r.length},
                           {"witness", w},
                           {"M", r.match_count},
                           {"C", r.compatible_count},
                           {"stats",
                            {{"inner_steps", r.stats.inner_steps},
                             {"edges_relaxed", r.stats.edges_relaxed},
                             {"live_tuples_peak", r.stats.live_tuples_peak},
                             {"range_queries", r.stats.range_queries},
                             {"recursion_calls", r.stats.recursion_calls}}},
                           {"wall_millis", r.wall_millis},
                           {"verified", r.verified}};
    return j.dump(2) + "\n";
}

SolveReport report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SolveReport r;
    r.algo = j.at("algo").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.delta = j.at("delta").get<Value>();
    r.length = j.at("length").get<std::size_t>();
    const nlohmann::json& w = j.at("witness");
    const auto& vals = w.at("values");
    const auto& ai = w.at("a_indices");
    const auto& bi = w.at("b_indices");
    if (vals.size() != ai.size() || vals.size() != bi.size())
        throw std::runtime_error("witness arrays disagree in length");
    for (std::size_t i = 0; i < vals.size(); ++i)
        r.witness.entries.push_back(
            {vals[i].get<Value>(), ai[i].get<Index>(), bi[i].get<Index>()});
    r.match_count = j.at("M").get<std::uint64_t>();
    r.compatible_count = j.at("C").get<std::uint64_t>();
    const nlohmann::json& s = j.at("stats");
    r.stats.inner_steps = s.at("inner_steps").get<std::uint64_t>();
    r.stats.edges_relaxed = s.at("edges_relaxed").get<std::uint64_t>();
    r.stats.live_tuples_peak = s.at("live_tuples_peak").get<std::uint64_t>();
    r.stats.range_queries = s.at("range_queries").get<std::uint64_t>();
    r.stats.recursion_calls = s.at("recursion_calls").get<std::uint64_t>();
    r.wall_millis = j.at("wall_millis").get<double>();
    r.verified = j.at("verified").get<bool>();
    return r;
}

namespace {

GenSpec gen_from_json(const nlohmann::json& j, const nlohmann::json& defaults) {
    auto field = [&](const char* key) -> const nlohmann::json& {
        if (j.contains(key)) return j.at(key);
        return defaults.at(key);
    };
    GenSpec g;
    g.n = field("n").get<std::size_t>();
    g.m = field("m").get<std::size_t>();
    g.sigma = field("sigma").get<std::int64_t>();
    g.dist = parse_dist(field("dist").get<std::string>());
    g.seed = field("seed").get<std::uint64_t>();
    return g;
}

}  // namespace

std::vector<BenchEntry> parse_bench_spec(std::string_view text) {
    const nlohmann::json root = nlohmann::json::parse(text);
    std::vector<BenchEntry> out;
    for (const nlohmann::json& e : root.at("entries")) {
        BenchEntry entry;
        entry.gen = gen_from_json(e, root);
        entry.delta = e.contains("delta") ? e.at("delta").get<Value>() : root.at("delta").get<Value>();
        const nlohmann::json& algos =
            e.contains("algos") ? e.at("algos") : root.at("algos");
        for (const nlohmann::json& a : algos) entry.algos.push_back(parse_algo(a.get<std::string>()));
        if (e.contains("reps"))
            entry.reps = e.at("reps").get<int>();
        else if (root.contains("reps"))
            entry.reps = root.at("reps").get<int>();
        out.push_back(std::move(entry));
    }
    return out;
}

void run_bench(const std::vector<BenchEntry>& entries, std::ostream& out) {
    out << kBenchCsvHeader << '\n';
    for (const BenchEntry& entry : entries) {
        const Instance inst = generate(entry.gen);
        for (int rep = 0; rep < entry.reps; ++rep) {
            for (const Algo algo : entry.algos) {
                const SolveReport r = make_report(algo, inst.a, inst.b, Delta(entry.delta));
                out << r.n << ',' << r.m << ',' << r.delta << ',' << entry.gen.sigma << ','
                    << r.match_count << ',' << r.compatible_count << ',' << r.length << ','
                    << r.algo << ',' << r.stats.inner_steps << ',' << r.stats.edges_relaxed << ','
                    << r.stats.live_tuples_peak << ',' << r.wall_millis << '\n';
            }
        }
    }
}

}  // namespace lcais
