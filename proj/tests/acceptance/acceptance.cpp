// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/brute_force.hpp"
#include "../support/fixture_path.hpp"
#include "mintest/benchmark.hpp"
#include "mintest/fixtures.hpp"
#include "mintest/length_heuristic.hpp"
#include "mintest/mandatory.hpp"
#include "mintest/oracle.hpp"
#include "mintest/pruning.hpp"
#include "mintest/report_io.hpp"
#include "mintest/search.hpp"

using namespace mintest;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) out.expect(false, "took " + std::to_string(secs) + " s");
    if (!out.ok) ++failures;
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

const std::vector<ColumnSet> expected_tests = {
    {1, 2, 4, 5, 6, 8, 10}, {1, 2, 4, 5, 7, 8, 10}, {1, 2, 4, 5, 8, 9, 10},
    {1, 3, 4, 5, 6, 8, 10}, {1, 3, 4, 5, 7, 8, 10}, {2, 3, 5, 6, 8, 9, 10},
    {2, 4, 5, 6, 8, 9, 10}, {2, 5, 6, 7, 8, 9, 10}, {3, 4, 5, 6, 8, 9, 10}};

} // namespace

int main() {
    const auto q = load_matrix_file(fixture("q25x10.txt"));
    const auto q_rows = rows_by_label(q);

    criterion(1, "fixture integrity: row popcounts and sorted order", 0.1, [&] {
        Outcome o;
        const std::vector<std::size_t> code{4, 2, 7, 4, 4, 5, 4, 4, 6, 6, 1, 3, 4,
                                            4, 6, 3, 7, 3, 3, 5, 4, 4, 3, 7, 3};
        const auto pops = row_popcounts(q);
        for (std::size_t s = 1; s <= 25; ++s)
            o.expect(pops.at(s) == code[s - 1], "S" + std::to_string(s) + " has " + std::to_string(pops.at(s)) + " ones");
        const std::vector<std::size_t> order{19, 12, 22, 11, 4, 2, 16, 25, 5, 10, 14, 18, 23,
                                             20, 24, 21, 17, 6, 7, 13, 9, 8, 1, 15, 3};
        const auto sorted = sort_rows_by_binary_value(q);
        o.expect(sorted.labels() == order, "sorted order " + join(sorted.labels()));
        o.note("first sorted row S" + std::to_string(sorted.label(0)));
        return o;
    });

    criterion(2, "mandatory columns {5,8,10}, witnesses, 94 candidate pairs", 0.1, [&] {
        Outcome o;
        const auto sorted = sort_rows_by_binary_value(q);
        const auto found = find_mandatory(sorted);
        o.expect(found.mandatory == ColumnSet{5, 8, 10}, "mandatory {" + found.mandatory.to_string() + "}");
        o.expect(found.mandatory.columns() == bf::mandatory(q_rows), "differs from pair scan");
        const std::vector<std::pair<std::size_t, RowPair>> printed{
            {5, {2, 25}}, {5, {6, 21}}, {8, {5, 25}}, {8, {19, 22}}, {10, {12, 22}}};
        for (const auto& [col, pair] : printed) {
            const auto it = found.witnesses.find(col);
            const bool present = it != found.witnesses.end() &&
                                 std::find(it->second.begin(), it->second.end(), pair) != it->second.end();
            o.expect(present, "missing witness x" + std::to_string(col));
        }
        const auto count = candidate_pairs(sorted).size();
        o.expect(count == 94 && bf::candidate_pair_count(q_rows) == 94, "candidate pairs " + std::to_string(count));
        char pct[32];
        std::snprintf(pct, sizeof pct, "%.2f%% of 300", 100.0 * static_cast<double>(count) / 300.0);
        o.expect(std::string(pct) == "31.33% of 300", pct);
        o.note(std::to_string(count) + " pairs = " + pct);
        return o;
    });

    criterion(3, "partition into six classes, singleton S22 dropped", 0.1, [&] {
        Outcome o;
        const auto p = partition_by_mandatory(q, {5, 8, 10});
        const std::vector<std::vector<std::size_t>> members{
            {11, 15, 18}, {2, 7, 19, 20, 21}, {3, 9, 12, 13, 16}, {1, 8}, {6, 10, 14, 23, 25}, {4, 5, 17, 24}};
        const std::vector<std::string> names{"Q1", "Q2", "Q3", "Q5", "Q6", "Q7"};
        o.expect(p.classes.size() == 6, std::to_string(p.classes.size()) + " classes");
        const auto got_names = class_names(q, p);
        for (std::size_t i = 0; i < std::min<std::size_t>(6, p.classes.size()); ++i) {
            o.expect(p.classes[i].members == members[i], names[i] + " = " + join(p.classes[i].members));
            o.expect(got_names[i] == names[i], "class " + std::to_string(i) + " named " + got_names[i]);
        }
        o.expect(p.dropped_singletons == std::vector<std::size_t>{22}, "dropped " + join(p.dropped_singletons));
        return o;
    });

    criterion(4, "unseparated pair counts per column", 0.1, [&] {
        Outcome o;
        const std::vector<std::size_t> expected{150, 164, 164, 146, 146, 156, 144, 150, 144, 150};
        const auto stats = column_pair_stats(q);
        std::vector<std::size_t> got;
        for (const auto& c : stats.columns) got.push_back(c.undistinguished_pairs);
        o.expect(got == expected, "got " + join(got));
        for (std::size_t c = 1; c <= 10; ++c)
            o.expect(bf::unseparated(q_rows, c) == expected[c - 1], "pair scan differs at x" + std::to_string(c));
        return o;
    });

    criterion(5, "length estimates: global 7, local 4 on Q2+Q3", 0.1, [&] {
        Outcome o;
        const auto g = estimate_length(column_pair_stats(q));
        o.expect(g.t0 == 7, "global t0 " + std::to_string(g.t0));
        o.expect(near(g.beta_t, 0.0068211, 1e-6), "beta_7 " + std::to_string(g.beta_t));
        o.expect(near(g.beta_next, 0.0032741, 1e-6), "bracket " + std::to_string(g.beta_next));
        const auto sorted = sort_rows_by_binary_value(q);
        const auto p = partition_by_mandatory(sorted, {5, 8, 10});
        const std::vector<std::size_t> q2q3{1, 2};
        const auto local = estimate_local_length(sorted, p, q2q3);
        o.expect(local.t0 == 4, "local t0 " + std::to_string(local.t0));
        if (local.estimate) {
            o.expect(near(local.estimate->beta_t, 0.0390, 1e-4), "local beta " + std::to_string(local.estimate->beta_t));
            o.expect(near(local.estimate->beta_next, 0.01734, 1e-4),
                     "local bracket " + std::to_string(local.estimate->beta_next));
        } else {
            o.expect(false, "no local estimate");
        }
        o.expect(integral_length(3, local.t0) == 7, "integral estimate");
        std::ostringstream s;
        s << "beta_7=" << g.beta_t << " bound=" << g.beta_next;
        o.note(s.str());
        return o;
    });

    criterion(6, "all 35 triples of {1,2,3,4,6,7,9} fail", 0.5, [&] {
        Outcome o;
        const auto sorted = sort_rows_by_binary_value(q);
        const auto p = partition_by_mandatory(sorted, {5, 8, 10});
        const ColumnSet cand{1, 2, 3, 4, 6, 7, 9};
        const auto sweep = all_k_subsets_fail(sorted, p, cand, 3);
        o.expect(sweep.subsets.size() == 35, std::to_string(sweep.subsets.size()) + " triples");
        o.expect(sweep.all_fail, "some triple separates every class");
        for (const auto& v : sweep.subsets) {
            o.expect(v.witness.has_value(), "no witness for " + v.columns.to_string());
            o.expect(!bf::is_test(q_rows, v.columns.united({5, 8, 10}).columns()),
                     "pair scan accepts " + v.columns.to_string());
        }
        o.note("local length > 3");
        return o;
    });

    criterion(7, "nine 2-column seeds with their row triples", 0.5, [&] {
        Outcome o;
        const auto sorted = sort_rows_by_binary_value(q);
        const auto p = partition_by_mandatory(sorted, {5, 8, 10});
        const auto seeds = theorem2_seeds(sorted, p, {1, 2, 3, 4, 6, 7, 9}, 2);
        const auto names = class_names(sorted, p);
        struct Printed {
            ColumnSet cols;
            std::string cls;
            std::vector<std::size_t> rows;
        };
        const std::vector<Printed> printed{{{1, 2}, "Q2", {10, 14, 25}}, {{1, 3}, "Q3", {3, 9, 13}},
                                           {{1, 6}, "Q2", {2, 19, 20}},  {{2, 3}, "Q6", {6, 10, 25}},
                                           {{2, 6}, "Q2", {2, 7, 19}},   {{2, 9}, "Q2", {2, 7, 21}},
                                           {{4, 6}, "Q2", {7, 19, 20}},  {{4, 7}, "Q2", {7, 19, 20}},
                                           {{6, 7}, "Q2", {7, 19, 20}}};
        for (const auto& e : printed) {
            const auto it = std::find_if(seeds.begin(), seeds.end(),
                                         [&](const SeedEntry& s) { return s.columns == e.cols && s.rows == e.rows; });
            if (it == seeds.end()) {
                o.expect(false, "(" + e.cols.to_string() + ") -> (" + join(e.rows) + ") not found");
                continue;
            }
            // the printed class of (1,2) is not where rows 10,14,25 live
            if (names[it->class_index] != e.cls)
                o.note("(" + e.cols.to_string() + ") rows found in " + names[it->class_index] + ", printed as " + e.cls);
            // independent check: the three rows coincide on the pair and differ on every added column
            bf::Rows sub;
            for (auto l : e.rows) sub.push_back(q_rows[l - 1]);
            o.expect(bf::project(sub[0], e.cols.columns()) == bf::project(sub[1], e.cols.columns()) &&
                         bf::project(sub[1], e.cols.columns()) == bf::project(sub[2], e.cols.columns()),
                     "rows differ on (" + e.cols.to_string() + ")");
        }
        o.note(std::to_string(seeds.size()) + " seeds in total");
        return o;
    });

    criterion(8, "example 1 end to end: length 7, nine dead-end tests", 2.0, [&] {
        Outcome o;
        const auto r = enumerate_minimal_tests(q);
        o.expect(r.minimal_length == 7, "length " + std::to_string(r.minimal_length));
        o.expect(r.minimal_tests == expected_tests, std::to_string(r.minimal_tests.size()) + " tests differ");
        for (const auto& t : r.minimal_tests) o.expect(is_deadend(q, t).deadend, t.to_string() + " not dead-end");
        const auto x6 = deadend_witness_pairs(q, {1, 2, 4, 5, 6, 8, 10}, 6);
        o.expect(std::find(x6.begin(), x6.end(), RowPair{10, 25}) != x6.end(), "x6 not witnessed by (10,25)");
        const auto oracle = oracle_minimal_tests(q);
        o.expect(oracle.min_length == 7 && oracle.minimal_tests == expected_tests, "oracle disagrees");
        const auto [len, brute] = bf::minimal_tests(q_rows);
        std::vector<bf::Cols> expected_lists;
        for (const auto& t : expected_tests) expected_lists.push_back(t.columns());
        o.expect(len == 7 && brute == expected_lists, "exhaustive string scan disagrees");
        return o;
    });

    criterion(9, "example 2 local tests on the class fixture", 0.5, [&] {
        Outcome o;
        const auto fx = load_class_fixture_file(fixture("example2_classes.txt"));
        const auto p = partition_by_mandatory(fx.matrix, fx.mandatory);
        o.expect(p.classes.size() == 8 && fx.matrix.row_count() == 16, "fixture shape");
        std::vector<ColumnSet> failing;
        for (std::size_t i = 0; i < fx.local_columns.size(); ++i)
            for (std::size_t j = i + 1; j < fx.local_columns.size(); ++j) {
                const ColumnSet pair{fx.local_columns.columns()[i], fx.local_columns.columns()[j]};
                bool separates = true;
                for (const auto& cls : p.classes) {
                    bf::Rows sub;
                    for (auto l : cls.members) sub.push_back(fx.matrix.row_string(fx.matrix.position_of(l)));
                    separates = separates && bf::is_test(sub, pair.columns());
                }
                if (!separates) failing.push_back(pair);
            }
        std::string failing_text;
        for (const auto& f : failing) failing_text += " {" + f.to_string() + "}";
        o.expect(failing == std::vector<ColumnSet>{{1, 8}, {5, 9}}, "failing pairs:" + failing_text);

        SearchConfig cfg;
        const auto local = search_local_tests(fx.matrix, p, fx.local_columns, cfg, 2);
        std::string local_text;
        for (const auto& t : local.local_tests) local_text += " {" + t.to_string() + "}";
        const std::vector<ColumnSet> printed_local{{1, 5}, {1, 9}, {5, 8}, {8, 9}};
        o.expect(local.local_tests == printed_local, "local tests:" + local_text);
        const auto integral = integral_length(fx.mandatory.size(), local.local_length);
        o.expect(integral == 8, "integral length " + std::to_string(integral));
        const std::vector<ColumnSet> printed_integral{
            {1, 2, 3, 4, 5, 6, 7, 10}, {1, 2, 3, 4, 6, 7, 9, 10}, {2, 3, 4, 5, 6, 7, 8, 10}, {2, 3, 4, 6, 7, 8, 9, 10}};
        std::vector<ColumnSet> integral_tests;
        for (const auto& t : local.local_tests) integral_tests.push_back(t.united(fx.mandatory));
        o.expect(integral_tests == printed_integral, std::to_string(integral_tests.size()) + " integral tests");
        const std::size_t source_pairs = PairIndex{fx.source_rows}.total_pairs();
        const double ratio = static_cast<double>(source_pairs) / static_cast<double>(p.within_class_pairs());
        o.expect(p.within_class_pairs() == 8 && source_pairs == 1225 && std::lround(std::floor(ratio)) == 153,
                 "pairs " + std::to_string(p.within_class_pairs()) + " vs " + std::to_string(source_pairs));
        char buf[96];
        std::snprintf(buf, sizeof buf, "within-class pairs 8 vs 1225 (ratio %.1f), length 6+%zu=%zu", ratio,
                      local.local_length, integral);
        o.note(buf);
        return o;
    });

    criterion(10, "residual pair bound for p = 3, 4, 5", 0, [&] {
        Outcome o;
        const std::array<std::size_t, 3> got{residual_pairs_lower_bound(3), residual_pairs_lower_bound(4),
                                             residual_pairs_lower_bound(5)};
        o.expect(got == std::array<std::size_t, 3>{1, 2, 4}, "got " + join({got.begin(), got.end()}));
        return o;
    });

    // 11 and 12 share one stream
    std::mt19937_64 rng(0xC0FFEE);
    struct Case {
        bf::Rows rows;
    };
    std::vector<Case> stream;
    for (int i = 0; i < 210; ++i) {
        const std::size_t n = 3 + rng() % 8;
        const std::size_t m = 2 + rng() % std::min<std::size_t>(11, (1u << n) - 2);
        stream.push_back({bf::random_rows(rng, m, n, std::array{0.3, 0.5, 0.7}[i % 3])});
    }

    criterion(11, "search equals the oracle on 210 random matrices, all 8 toggle settings", 60.0, [&] {
        Outcome o;
        std::size_t runs = 0;
        for (std::size_t i = 0; i < stream.size() && o.ok; ++i) {
            const auto m = BooleanMatrix::from_strings(stream[i].rows);
            const auto oracle = oracle_minimal_tests(m);
            const auto [len, brute] = bf::minimal_tests(stream[i].rows);
            std::vector<bf::Cols> oracle_lists;
            for (const auto& t : oracle.minimal_tests) oracle_lists.push_back(t.columns());
            o.expect(oracle.min_length == len && oracle_lists == brute, "oracle vs string scan, matrix " + std::to_string(i));
            const auto mandatory = find_mandatory(m).mandatory;
            for (unsigned bits = 0; bits < 8; ++bits) {
                SearchConfig cfg;
                cfg.use_heuristic = bits & 1U;
                cfg.theorem2 = bits & 2U;
                cfg.bijective = bits & 4U;
                const auto r = enumerate_minimal_tests(m, cfg);
                ++runs;
                o.expect(r.minimal_tests == oracle.minimal_tests,
                         "matrix " + std::to_string(i) + " toggles " + std::to_string(bits));
                for (const auto& t : r.minimal_tests)
                    o.expect(mandatory.is_subset_of(t) && is_deadend(m, t).deadend,
                             "matrix " + std::to_string(i) + " test " + t.to_string());
            }
        }
        o.note(std::to_string(runs) + " searches");
        return o;
    });

    criterion(12, "pruning checks no more subsets and loses no test", 0, [&] {
        Outcome o;
        std::uint64_t with_total = 0, without_total = 0;
        for (std::size_t i = 0; i < stream.size(); ++i) {
            const auto m = BooleanMatrix::from_strings(stream[i].rows);
            SearchConfig plain;
            plain.theorem2 = false;
            plain.bijective = false;
            const auto with = enumerate_minimal_tests(m);
            const auto without = enumerate_minimal_tests(m, plain);
            with_total += with.stats.subsets_checked;
            without_total += without.stats.subsets_checked;
            o.expect(with.stats.subsets_checked <= without.stats.subsets_checked,
                     "matrix " + std::to_string(i) + ": " + std::to_string(with.stats.subsets_checked) + " > " +
                         std::to_string(without.stats.subsets_checked));
            o.expect(with.minimal_tests == without.minimal_tests, "matrix " + std::to_string(i) + " lost a test");
        }
        o.note("checked " + std::to_string(with_total) + " vs " + std::to_string(without_total));
        return o;
    });

    criterion(13, "deterministic bench CSV is byte-identical across runs", 0, [&] {
        Outcome o;
        StreamConfig cfg;
        cfg.count = 60;
        cfg.seed = 42;
        const auto a = benchmark_csv(run_benchmark(cfg), true);
        cfg.workers = 4;
        const auto b = benchmark_csv(run_benchmark(cfg), true);
        o.expect(a == b, "CSV differs");
        o.expect(a.find("# generated") == std::string::npos, "timestamp line present");
        return o;
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
