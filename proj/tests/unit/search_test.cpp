#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "../support/brute_force.hpp"
#include "../support/fixture_path.hpp"
#include "mintest/errors.hpp"
#include "mintest/search.hpp"

using namespace mintest;

TEST_CASE("dead-end check and witnesses") {
    const auto m = load_matrix("00\n01\n10\n");
    const auto ok = is_deadend(m, {1, 2});
    CHECK(ok.deadend);
    REQUIRE(ok.witnesses.size() == 2);
    CHECK(ok.witnesses[0].pair == RowPair{1, 3});
    CHECK(ok.witnesses[1].pair == RowPair{1, 2});
    CHECK(deadend_witness_pairs(m, {1, 2}, 1) == std::vector<RowPair>{{1, 3}});
    CHECK_THROWS_AS(is_deadend(m, {1}), InputError);

    const auto m2 = load_matrix("001\n010\n100\n");
    const auto not_deadend = is_deadend(m2, {1, 2, 3});
    CHECK_FALSE(not_deadend.deadend);
    CHECK(not_deadend.removable_column);
    CHECK(deadend_reduce(m2, {1, 2, 3}) == ColumnSet{1, 2});
}

TEST_CASE("dead-end check agrees with the reference") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 3 + rng() % 5;
        const auto rows = bf::random_rows(rng, 2 + rng() % 7, n, 0.5);
        const auto m = BooleanMatrix::from_strings(rows);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            const auto cols = bf::cols_of_mask(mask, n);
            if (!bf::is_test(rows, cols)) continue;
            CHECK(is_deadend(m, ColumnSet(cols)).deadend == bf::is_deadend(rows, cols));
            CHECK(bf::is_deadend(rows, deadend_reduce(m, ColumnSet(cols)).columns()));
        }
    }
}

TEST_CASE("trivial matrices") {
    const auto two = enumerate_minimal_tests(load_matrix("01\n10\n"));
    CHECK(two.minimal_length == 1);
    CHECK(two.minimal_tests == std::vector<ColumnSet>{{1}, {2}});

    const auto three = enumerate_minimal_tests(load_matrix("00\n01\n10\n"));
    CHECK(three.minimal_length == 2);
    CHECK(three.minimal_tests == std::vector<ColumnSet>{{1, 2}});

    const auto one = enumerate_minimal_tests(load_matrix("1\n"));
    CHECK(one.minimal_length == 0);
}

TEST_CASE("duplicate columns collapse and expand again") {
    // columns 1 and 3 equal, 2 and 4 complementary
    const auto m = load_matrix("0101\n0000\n1110\n1011\n");
    const auto with = enumerate_minimal_tests(m);
    SearchConfig plain;
    plain.bijective = false;
    const auto without = enumerate_minimal_tests(m, plain);
    CHECK(with.minimal_tests == without.minimal_tests);
    CHECK(with.stats.pruned_bijective > 0);
}

TEST_CASE("correction loop moves both ways") {
    std::mt19937_64 rng(51);
    bool saw_up = false, saw_down = false;
    for (int round = 0; round < 300 && !(saw_up && saw_down); ++round) {
        const auto rows = bf::random_rows(rng, 10, 9, std::array{0.3, 0.5, 0.7}[round % 3]);
        const auto r = enumerate_minimal_tests(BooleanMatrix::from_strings(rows));
        CHECK(r.minimal_length == bf::minimal_tests(rows).first);
        CHECK(r.corrections.size() <= 9);
        for (const auto& c : r.corrections) {
            CHECK(c.old_length != c.new_length);
            saw_up = saw_up || c.new_length > c.old_length;
            saw_down = saw_down || c.new_length < c.old_length;
        }
    }
    CHECK(saw_up);
    CHECK(saw_down);
}

TEST_CASE("first mode returns one certified minimal test") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 100; ++round) {
        const auto rows = bf::random_rows(rng, 11, 8, std::array{0.3, 0.5, 0.7}[round % 3]);
        SearchConfig cfg;
        cfg.first_only = true;
        cfg.theorem2 = round % 2;
        const auto r = enumerate_minimal_tests(BooleanMatrix::from_strings(rows), cfg);
        const auto [len, tests] = bf::minimal_tests(rows);
        CHECK_FALSE(r.complete);
        REQUIRE(r.minimal_tests.size() == 1);
        CHECK(r.minimal_length == len);
        CHECK(std::find(tests.begin(), tests.end(), r.minimal_tests[0].columns()) != tests.end());
    }
}

TEST_CASE("no-heuristic start and its ceiling") {
    const auto m = load_matrix_file(fixture("q25x10.txt"));
    SearchConfig cfg;
    cfg.use_heuristic = false;
    const auto r = enumerate_minimal_tests(m, cfg);
    CHECK(r.minimal_length == 7);
    CHECK(r.minimal_tests.size() == 9);
    CHECK(r.start_length == 3 + 3);  // largest class has 5 rows

    std::string wide(23, '0');
    std::string other = wide;
    other[22] = '1';
    cfg.search_ceiling = 22;
    CHECK_THROWS_AS(enumerate_minimal_tests(BooleanMatrix::from_strings({wide, other}), cfg), CeilingError);
}

TEST_CASE("determinism") {
    const auto m = load_matrix_file(fixture("q25x10.txt"));
    const auto a = enumerate_minimal_tests(m);
    const auto b = enumerate_minimal_tests(m);
    CHECK(a.minimal_tests == b.minimal_tests);
    CHECK(a.stats.subsets_checked == b.stats.subsets_checked);
    CHECK(a.stats.levels_visited == b.stats.levels_visited);
}

TEST_CASE("verify_test") {
    const auto m = load_matrix_file(fixture("q25x10.txt"));
    const auto yes = verify_test(m, {1, 2, 4, 5, 6, 8, 10});
    CHECK(yes.is_test);
    CHECK(yes.is_deadend == true);
    CHECK(yes.minimal == Minimality::yes);
    const auto no = verify_test(m, {5, 8, 10});
    CHECK_FALSE(no.is_test);
    CHECK(no.minimal == Minimality::no);
    const auto full = verify_test(m, ColumnSet::all(10));
    CHECK(full.is_test);
    CHECK(full.minimal == Minimality::no);
    const auto beyond = verify_test(m, ColumnSet::all(10), 5);
    CHECK(beyond.minimal == Minimality::no);  // not dead-end, so not minimal
    const auto unknown = verify_test(m, {1, 2, 4, 5, 6, 8, 10}, 5);
    CHECK(unknown.minimal == Minimality::unknown);
    CHECK(unknown.estimated_length == 7);
    CHECK_THROWS_AS(verify_test(m, {11}), InputError);
}
