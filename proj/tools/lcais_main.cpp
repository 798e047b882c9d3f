#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lcais/instance_io.hpp"
#include "lcais/report.hpp"

namespace {

int cmd_solve(const std::string& instance_path, const std::string& a_path, const std::string& b_path,
              lcais::Value delta_value, const std::string& algo_name, bool verify, bool json,
              std::uint64_t cell_budget) {
    lcais::Instance inst;
    if (!instance_path.empty()) {
        inst = lcais::load_instance_file(instance_path);
    } else {
        inst.a = lcais::load_sequence_file(a_path);
        inst.b = lcais::load_sequence_file(b_path);
    }
    const lcais::Delta delta(delta_value);
    const lcais::Algo algo = lcais::parse_algo(algo_name);

    lcais::SolveReport report = lcais::make_report(algo, inst.a, inst.b, delta, cell_budget);
    if (verify) {
        const auto fault = lcais::find_witness_fault(report.witness, inst.a, inst.b, delta);
        if (fault) {
            std::cerr << "verification failed at witness entry " << fault->entry << ": "
                      << fault->detail << "\n";
            return 2;
        }
        report.verified = true;
    }
    std::cout << (json ? lcais::report_to_json(report) : lcais::report_to_text(report));
    return 0;
}

int cmd_gen(const lcais::GenSpec& spec, const std::string& out_path) {
    const lcais::Instance inst = lcais::generate(spec);
    const std::string text = lcais::format_instance(inst);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int cmd_bench(const std::string& spec_path, const std::string& out_path) {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + spec_path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::vector<lcais::BenchEntry> entries = lcais::parse_bench_spec(text);
    if (out_path.empty()) {
        lcais::run_bench(entries, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        lcais::run_bench(entries, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest common almost-increasing subsequence toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve one instance");
    std::string instance_path, a_path, b_path, algo = "dc";
    lcais::Value delta_value = 0;
    bool verify = false, json = false;
    std::uint64_t cell_budget = lcais::kDefaultCellBudget;
    auto* inst_opt = solve->add_option("--instance", instance_path, "instance file: line 1 = A, line 2 = B");
    auto* a_opt = solve->add_option("--a", a_path, "file holding sequence A");
    auto* b_opt = solve->add_option("--b", b_path, "file holding sequence B");
    solve->add_option("--delta", delta_value, "almost-increasing slack (non-negative)")->required();
    solve->add_option("--algo", algo, "brute | dp3 | dc | sparse")->required();
    solve->add_flag("--verify", verify, "validate the witness; failure exits 2");
    solve->add_flag("--json", json, "structured report");
    solve->add_option("--cell-budget", cell_budget, "cell cap for dp3");
    a_opt->needs(b_opt);
    b_opt->needs(a_opt);
    inst_opt->excludes(a_opt);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a workload instance");
    lcais::GenSpec spec;
    std::string dist = "uniform", gen_out;
    gen->add_option("--n", spec.n, "length of A")->required();
    gen->add_option("--m", spec.m, "length of B")->required();
    gen->add_option("--sigma", spec.sigma, "alphabet size")->required();
    gen->add_option("--dist", dist, "uniform | permutation | constant | blocks")->required();
    gen->add_option("--seed", spec.seed, "64-bit seed")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark sweep");
    std::string bench_spec, bench_out;
    bench->add_option("--spec", bench_spec, "JSON sweep description")->required();
    bench->add_option("--out", bench_out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            if (instance_path.empty() && (a_path.empty() || b_path.empty())) {
                std::cerr << "solve needs --instance or both --a and --b\n";
                return 1;
            }
            return cmd_solve(instance_path, a_path, b_path, delta_value, algo, verify, json,
                             cell_budget);
        }
        if (gen->parsed()) {
            spec.dist = lcais::parse_dist(dist);
            return cmd_gen(spec, gen_out);
        }
        return cmd_bench(bench_spec, bench_out);
    } catch (const lcais::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const lcais::InstanceTooLarge& e) {
        std::cerr << "instance too large: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
