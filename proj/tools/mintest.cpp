#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mintest/benchmark.hpp"
#include "mintest/errors.hpp"
#include "mintest/generator.hpp"
#include "mintest/report_io.hpp"

using namespace mintest;

namespace {

enum Exit { ok = 0, input_error = 1, mismatch = 2, ceiling = 3 };

struct Globals {
    std::string input;
    std::string output;
    std::uint64_t seed = 1;
    bool deterministic = false;
    bool json = false;
};

BooleanMatrix read_input(const Globals& g) {
    if (!g.input.empty() && g.input != "-") return load_matrix_file(g.input);
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return load_matrix(text);
}

void emit(const Globals& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw InputError("cannot write " + g.output);
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mintest: minimal tests of boolean matrices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("-i,--input", g.input, "matrix file ('-' or omitted: stdin)");
    app.add_option("-o,--output", g.output, "write the result here instead of stdout");
    app.add_option("--seed", g.seed, "PRNG seed for gen and bench");
    app.add_flag("--deterministic", g.deterministic, "no timestamp line, timings written as 0");
    app.add_flag("--json", g.json, "machine-readable output");

    auto* analyze_cmd = app.add_subcommand("analyze", "mandatory columns, classes, length estimates");
    bool with_seeds = false;
    analyze_cmd->add_flag("--seeds", with_seeds, "list 2-column seeds with 3 or more equal rows in a class");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "find minimal tests");
    bool all = false, first = false, no_heuristic = false, no_theorem2 = false, no_bijective = false;
    bool cross_check = false;
    std::string report_path;
    enumerate_cmd->add_flag("--all", all, "every minimal test (default)");
    enumerate_cmd->add_flag("--first", first, "one certified minimal test");
    enumerate_cmd->add_flag("--no-heuristic", no_heuristic, "start from the information bound");
    enumerate_cmd->add_flag("--no-theorem2", no_theorem2, "disable seed pruning");
    enumerate_cmd->add_flag("--no-bijective-prune", no_bijective, "disable equal/complement column collapsing");
    enumerate_cmd->add_option("--report", report_path, "CSV with one row per minimal test");
    enumerate_cmd->add_flag("--cross-check", cross_check, "compare with exhaustive enumeration; exit 2 on mismatch");
    enumerate_cmd->get_option("--first")->excludes(enumerate_cmd->get_option("--all"));

    auto* verify_cmd = app.add_subcommand("verify", "check a column set");
    std::string columns_text;
    verify_cmd->add_option("-c,--columns", columns_text, "e.g. 1,2,4,5")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration");
    bool deadend = false;
    std::size_t oracle_ceiling = 0;
    oracle_cmd->add_flag("--deadend", deadend, "also list every dead-end test");
    oracle_cmd->add_option("--ceiling", oracle_ceiling, "column limit (default 22, or 16 with --deadend)");

    auto* gen_cmd = app.add_subcommand("gen", "random matrix with distinct rows");
    GeneratorConfig gen_cfg{10, 8, 0.5, 0};
    gen_cmd->add_option("-m,--rows", gen_cfg.rows)->required();
    gen_cmd->add_option("-n,--cols", gen_cfg.cols)->required();
    gen_cmd->add_option("-d,--density", gen_cfg.ones_density, "probability of a 1");

    auto* bench_cmd = app.add_subcommand("bench", "stream of random matrices against the oracle");
    StreamConfig stream;
    bench_cmd->add_option("--count", stream.count);
    bench_cmd->add_option("--rows-min", stream.rows_min);
    bench_cmd->add_option("--rows-max", stream.rows_max);
    bench_cmd->add_option("--cols-min", stream.cols_min);
    bench_cmd->add_option("--cols-max", stream.cols_max);
    bench_cmd->add_option("--densities", stream.densities)->delimiter(',');
    bench_cmd->add_option("--workers", stream.workers);
    bench_cmd->add_option("--oracle-ceiling", stream.oracle_ceiling);
    std::string summary_path;
    bench_cmd->add_option("--summary", summary_path, "write the summary here instead of stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*analyze_cmd) {
            const auto a = analyze(read_input(g), with_seeds);
            emit(g, g.json ? dump(to_json(a)) : format_analysis(a));
            return ok;
        }
        if (*enumerate_cmd) {
            const auto m = read_input(g);
            SearchConfig cfg;
            cfg.use_heuristic = !no_heuristic;
            cfg.theorem2 = !no_theorem2;
            cfg.bijective = !no_bijective;
            cfg.first_only = first;
            const auto report = enumerate_minimal_tests(m, cfg);
            if (!report_path.empty()) write_file(report_path, tests_csv(report.minimal_tests));
            emit(g, g.json ? dump(to_json(report)) : format_report(report));
            if (cross_check) {
                const auto oracle = oracle_minimal_tests(m);
                const bool same = first ? report.minimal_length == oracle.min_length &&
                                              std::find(oracle.minimal_tests.begin(), oracle.minimal_tests.end(),
                                                        report.minimal_tests.front()) != oracle.minimal_tests.end()
                                        : report.minimal_tests == oracle.minimal_tests;
                if (!same) {
                    std::cerr << "mismatch: exhaustive enumeration gives length " << oracle.min_length << " with "
                              << oracle.minimal_tests.size() << " minimal tests\n";
                    return mismatch;
                }
                std::cerr << "cross-check: agrees with exhaustive enumeration\n";
            }
            return ok;
        }
        if (*verify_cmd) {
            const auto m = read_input(g);
            const auto test = ColumnSet::parse(columns_text);
            const auto v = verify_test(m, test);
            emit(g, g.json ? dump(to_json(test, v)) : format_verdict(test, v));
            return ok;
        }
        if (*oracle_cmd) {
            const auto m = read_input(g);
            const auto r = deadend ? oracle_deadend_tests(m, oracle_ceiling ? oracle_ceiling : default_deadend_ceiling)
                                   : oracle_minimal_tests(m, oracle_ceiling ? oracle_ceiling : default_minimal_ceiling);
            if (g.json) {
                emit(g, dump(to_json(r)));
            } else {
                emit(g, tests_csv(deadend ? *r.deadend_tests : r.minimal_tests));
            }
            return ok;
        }
        if (*gen_cmd) {
            gen_cfg.seed = g.seed;
            emit(g, format_matrix(generate_matrix(gen_cfg)));
            return ok;
        }
        if (*bench_cmd) {
            stream.seed = g.seed;
            const auto records = run_benchmark(stream);
            emit(g, g.json ? dump(to_json(records, g.deterministic)) : benchmark_csv(records, g.deterministic));
            const auto summary = summarize(records);
            if (summary_path.empty()) {
                std::cerr << format_summary(summary);
            } else {
                write_file(summary_path, format_summary(summary));
            }
            return summary.mismatches ? mismatch : ok;
        }
    } catch (const CeilingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ceiling;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
