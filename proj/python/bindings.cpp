#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcais/dense.hpp"
#include "lcais/generate.hpp"
#include "lcais/hirschberg.hpp"
#include "lcais/report.hpp"
#include "lcais/sparse.hpp"

namespace py = pybind11;
using namespace lcais;

namespace {

Witness solve_algo(const Sequence& a, const Sequence& b, Value delta, const std::string& algo,
                   StatsRecord* stats) {
    return run_solver(parse_algo(algo), a, b, Delta(delta), stats);
}

}  // namespace

PYBIND11_MODULE(_lcais, m) {
    m.doc() = "longest common almost-increasing subsequence solvers";

    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge");
    py::register_exception<BrokenChain>(m, "BrokenChain");

    py::class_<WitnessEntry>(m, "WitnessEntry")
        .def(py::init<Value, Index, Index>(), py::arg("value"), py::arg("a_index"), py::arg("b_index"))
        .def_readonly("value", &WitnessEntry::value)
        .def_readonly("a_index", &WitnessEntry::a_index)
        .def_readonly("b_index", &WitnessEntry::b_index)
        .def("__repr__", [](const WitnessEntry& e) {
            return "WitnessEntry(value=" + std::to_string(e.value) +
                   ", a_index=" + std::to_string(e.a_index) +
                   ", b_index=" + std::to_string(e.b_index) + ")";
        });

    py::class_<Witness>(m, "Witness")
        .def(py::init([](const std::vector<std::tuple<Value, Index, Index>>& entries) {
                 Witness w;
                 for (const auto& [v, ai, bi] : entries) w.entries.push_back({v, ai, bi});
                 return w;
             }),
             py::arg("entries") = std::vector<std::tuple<Value, Index, Index>>{})
        .def_readonly("entries", &Witness::entries)
        .def("values", &Witness::values)
        .def("__len__", &Witness::length);

    py::class_<StatsRecord>(m, "StatsRecord")
        .def(py::init<>())
        .def_readonly("inner_steps", &StatsRecord::inner_steps)
        .def_readonly("live_tuples_peak", &StatsRecord::live_tuples_peak)
        .def_readonly("edges_relaxed", &StatsRecord::edges_relaxed)
        .def_readonly("range_queries", &StatsRecord::range_queries)
        .def_readonly("recursion_calls", &StatsRecord::recursion_calls);

    py::class_<MatchPair>(m, "MatchPair")
        .def_readonly("a_index", &MatchPair::a_index)
        .def_readonly("b_index", &MatchPair::b_index)
        .def_readonly("value", &MatchPair::value)
        .def("__repr__", [](const MatchPair& p) {
            return "MatchPair(a_index=" + std::to_string(p.a_index) +
                   ", b_index=" + std::to_string(p.b_index) + ", value=" + std::to_string(p.value) +
                   ")";
        });

    m.def(
        "is_almost_increasing",
        [](const Sequence& s, Value delta) { return is_almost_increasing(s, Delta(delta)); },
        py::arg("s"), py::arg("delta"));
    m.def(
        "is_subsequence", [](const Sequence& s, const Sequence& a) { return is_subsequence(s, a); },
        py::arg("s"), py::arg("a"));
    m.def(
        "validate_witness",
        [](const Witness& w, const Sequence& a, const Sequence& b, Value delta) {
            return validate_witness(w, a, b, Delta(delta));
        },
        py::arg("witness"), py::arg("a"), py::arg("b"), py::arg("delta"));
    m.def(
        "witness_fault",
        [](const Witness& w, const Sequence& a, const Sequence& b,
           Value delta) -> std::optional<std::string> {
            if (auto f = find_witness_fault(w, a, b, Delta(delta))) return f->detail;
            return std::nullopt;
        },
        py::arg("witness"), py::arg("a"), py::arg("b"), py::arg("delta"),
        "first violated invariant as text, or None for a valid witness");

    m.def(
        "brute_force_lcais",
        [](const Sequence& a, const Sequence& b, Value delta) {
            return brute_force_lcais(a, b, Delta(delta));
        },
        py::arg("a"), py::arg("b"), py::arg("delta"));
    m.def(
        "lcais_reference",
        [](const Sequence& a, const Sequence& b, Value delta) {
            return lcais_reference(a, b, Delta(delta));
        },
        py::arg("a"), py::arg("b"), py::arg("delta"));
    m.def(
        "lcais_divide_conquer",
        [](const Sequence& a, const Sequence& b, Value delta, StatsRecord* stats) {
            return lcais_divide_conquer(a, b, Delta(delta), stats);
        },
        py::arg("a"), py::arg("b"), py::arg("delta"), py::arg("stats") = nullptr);
    m.def(
        "sparse_lcais",
        [](const Sequence& a, const Sequence& b, Value delta, StatsRecord* stats) {
            return sparse_lcais(a, b, Delta(delta), stats);
        },
        py::arg("a"), py::arg("b"), py::arg("delta"), py::arg("stats") = nullptr);
    m.def("solve", &solve_algo, py::arg("a"), py::arg("b"), py::arg("delta"),
          py::arg("algo") = "dc", py::arg("stats") = nullptr,
          "dispatch to one of: brute, dp3, dc, sparse");

    m.def(
        "lcs", [](const Sequence& a, const Sequence& b) { return lcs(a, b); }, py::arg("a"),
        py::arg("b"), "maximum-length common subsequence (linear-space divide and conquer)");
    m.def(
        "compute_l", [](const Sequence& a, const Sequence& b) { return compute_l(a, b); },
        py::arg("a"), py::arg("b"));

    m.def(
        "compute_matches",
        [](const Sequence& a, const Sequence& b) { return compute_matches(a, b); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "count_compatible_pairs",
        [](const Sequence& a, const Sequence& b) {
            return count_compatible_pairs(compute_matches(a, b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "generate",
        [](std::size_t n, std::size_t m, std::int64_t sigma, const std::string& dist,
           std::uint64_t seed) {
            const Instance inst = generate(GenSpec{n, m, sigma, parse_dist(dist), seed});
            return std::make_pair(inst.a, inst.b);
        },
        py::arg("n"), py::arg("m"), py::arg("sigma"), py::arg("dist"), py::arg("seed"),
        "deterministic workload instance (a, b)");
}
