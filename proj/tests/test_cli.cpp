#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lcais/dense.hpp"
#include "lcais/instance_io.hpp"
#include "lcais/report.hpp"
#include "oracles.hpp"

using namespace lcais;
using namespace lcais::testing;

TEST_CASE("sequence parsing accepts signs and CRLF") {
    CHECK(parse_sequence_text("1 -2 +3") == Sequence{1, -2, 3});
    const Instance inst = parse_instance_text("3 1 4\r\n-5 2\r\n");
    CHECK(inst.a == Sequence{3, 1, 4});
    CHECK(inst.b == Sequence{-5, 2});
}

TEST_CASE("instance parsing edge shapes") {
    const Instance no_b = parse_instance_text("1 2 3\n");
    CHECK(no_b.a == Sequence{1, 2, 3});
    CHECK(no_b.b.empty());
    const Instance blank_b = parse_instance_text("1 2 3\n\n");
    CHECK(blank_b.b.empty());
    CHECK_THROWS_AS(parse_instance_text("1\n2\n3\n"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_instance_text("1 2\n3 x4\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    try {
        parse_sequence_text("99999999999999999999");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("overflow") != std::string::npos);
    }
}

TEST_CASE("format/parse round trip") {
    const Instance inst{table1_a(), table1_b()};
    const Instance back = parse_instance_text(format_instance(inst));
    CHECK(back.a == inst.a);
    CHECK(back.b == inst.b);
}

TEST_CASE("generator is deterministic per seed") {
    const GenSpec spec{100, 100, 100, Dist::Permutation, 1};
    const Instance x = generate(spec);
    const Instance y = generate(spec);
    CHECK(x.a == y.a);
    CHECK(x.b == y.b);
    // a permutation of 1..n
    Sequence sorted = x.a;
    std::sort(sorted.begin(), sorted.end());
    Sequence expect(100);
    std::iota(expect.begin(), expect.end(), Value{1});
    CHECK(sorted == expect);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(generate(GenSpec{10, 10, 5, Dist::Permutation, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate(GenSpec{10, 10, 0, Dist::Uniform, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_dist("gaussian"), std::invalid_argument);
}

TEST_CASE("constant instances match everywhere") {
    const Instance inst = generate(GenSpec{8, 8, 5, Dist::Constant, 3});
    CHECK(inst.a == Sequence(8, 5));
    CHECK(compute_matches(inst.a, inst.b).size() == 64);
}

TEST_CASE("uniform match count is near n*m/sigma") {
    const Instance inst = generate(GenSpec{50, 50, 5, Dist::Uniform, 7});
    const double expected = 50.0 * 50.0 / 5.0;
    const auto got = static_cast<double>(compute_matches(inst.a, inst.b).size());
    CHECK(got > 0.5 * expected);
    CHECK(got < 1.5 * expected);
}

TEST_CASE("blocks instances expose long almost-increasing structure") {
    const Instance inst = generate(GenSpec{60, 60, 6, Dist::Blocks, 11});
    const Witness w = lcais_divide_conquer(inst.a, inst.b, Delta(2));
    CHECK(w.length() >= 8);
}

TEST_CASE("solver dispatch names") {
    CHECK(parse_algo("brute") == Algo::Brute);
    CHECK(parse_algo("dp3") == Algo::Dp3);
    CHECK(parse_algo("dc") == Algo::Dc);
    CHECK(parse_algo("sparse") == Algo::Sparse);
    CHECK_THROWS_AS(parse_algo("magic"), std::invalid_argument);
    CHECK(algo_name(Algo::Sparse) == "sparse");
}

TEST_CASE("report JSON round trip is exact") {
    const SolveReport r = make_report(Algo::Dc, table1_a(), table1_b(), Delta(3));
    const SolveReport back = report_from_json(report_to_json(r));
    CHECK(back.algo == r.algo);
    CHECK(back.n == r.n);
    CHECK(back.m == r.m);
    CHECK(back.delta == r.delta);
    CHECK(back.length == r.length);
    CHECK(back.witness == r.witness);
    CHECK(back.match_count == r.match_count);
    CHECK(back.compatible_count == r.compatible_count);
    CHECK(back.stats.inner_steps == r.stats.inner_steps);
    CHECK(back.stats.live_tuples_peak == r.stats.live_tuples_peak);
}

TEST_CASE("report text carries the headline facts") {
    const SolveReport r = make_report(Algo::Sparse, table1_a(), table1_b(), Delta(3));
    const std::string text = report_to_text(r);
    CHECK(text.find("length: 4") != std::string::npos);
    CHECK(text.find("M: 12") != std::string::npos);
}

TEST_CASE("bench emits the pinned header and stable counters") {
    const std::string spec = R"({
      "delta": 1,
      "algos": ["dc", "sparse"],
      "entries": [
        {"n": 20, "m": 20, "sigma": 4, "dist": "uniform", "seed": 5, "reps": 2}
      ]
    })";
    const auto entries = parse_bench_spec(spec);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].reps == 2);
    std::ostringstream out;
    run_bench(entries, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == std::string(kBenchCsvHeader));
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    REQUIRE(rows.size() == 4);  // 2 reps x 2 algos
    // identical counters across reps: strip the wall_millis column
    auto strip_wall = [](const std::string& row) { return row.substr(0, row.rfind(',')); };
    CHECK(strip_wall(rows[0]) == strip_wall(rows[2]));
    CHECK(strip_wall(rows[1]) == strip_wall(rows[3]));
}
