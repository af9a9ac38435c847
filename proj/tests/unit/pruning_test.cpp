#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/brute_force.hpp"
#include "../support/fixture_path.hpp"
#include "mintest/pruning.hpp"

using namespace mintest;

TEST_CASE("pair formulas") {
    CHECK(pair_count(4) == 6);
    CHECK(max_split_pairs(5) == 6);
    CHECK(residual_pairs_lower_bound(2) == 0);
    CHECK(residual_pairs_lower_bound(3) == 1);
    CHECK(residual_pairs_lower_bound(6) == 6);
    CHECK_THROWS_AS(residual_pairs_lower_bound(1), std::invalid_argument);
}

TEST_CASE("residual bound holds for every split of p equal rows") {
    // p equal rows, one extra column splits them a : p-a; equal pairs left = C(a,2)+C(p-a,2)
    for (std::size_t p = 2; p <= 12; ++p)
        for (std::size_t a = 0; a <= p; ++a) {
            const auto left = a * (a - (a > 0)) / 2 + (p - a) * (p - a - (p > a)) / 2;
            CHECK(left >= residual_pairs_lower_bound(p));
        }
}

TEST_CASE("identical projection groups") {
    const auto m = load_matrix("000\n001\n010\n011\n");
    const auto g = identical_projection_groups(m, {1});
    REQUIRE(g.size() == 1);
    CHECK(g[0].multiplicity() == 4);
    CHECK(identical_projection_groups(m, {2, 3}).empty());
}

TEST_CASE("seeds really block every one-column extension") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = 4 + rng() % 5;
        const auto rows = bf::random_rows(rng, 12, n, 0.5);
        const auto m = BooleanMatrix::from_strings(rows);
        const auto p = partition_by_mandatory(m, {});
        const auto all = ColumnSet::all(n);
        for (const auto& s : theorem2_seeds(m, p, all, 2)) {
            CHECK(s.rows.size() >= 3);
            for (std::size_t c = 1; c <= n; ++c) {
                if (s.columns.contains(c)) continue;
                auto cols = s.columns.united(ColumnSet{c});
                bf::Rows sub;
                for (auto l : s.rows) sub.push_back(rows[l - 1]);
                CHECK_FALSE(bf::is_test(sub, cols.columns()));
            }
        }
    }
    CHECK_THROWS_AS(theorem2_seeds(load_matrix("0\n1\n"), {}, {1}, 1, 2), std::invalid_argument);
}

TEST_CASE("sweep reports a witness for every failing subset") {
    const auto m = load_matrix("000\n011\n101\n110\n");
    const auto p = partition_by_mandatory(m, {});
    const auto sweep = all_k_subsets_fail(m, p, ColumnSet::all(3), 1);
    CHECK(sweep.all_fail);
    CHECK(sweep.subsets.size() == 3);
    for (const auto& v : sweep.subsets) CHECK(v.witness);
    CHECK_FALSE(all_k_subsets_fail(m, p, ColumnSet::all(3), 2).all_fail);
}

TEST_CASE("bijective pairs") {
    const auto m = load_matrix("010\n101\n011\n");
    const auto rel = bijective_column_pairs(m);
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == ColumnRelation{1, 2, true});
    const auto eq = bijective_column_pairs(load_matrix("00\n11\n"));
    REQUIRE(eq.size() == 1);
    CHECK_FALSE(eq[0].complement);
}

TEST_CASE("cycle costs") {
    const auto c = cycle_costs(2, 3, 10, 3, 7);
    CHECK(c.z1 == doctest::Approx(2 * 3 * 35.0));
    CHECK(c.z2 == doctest::Approx(2 * 3 * 21.0));
    CHECK(c.chosen == CycleStrategy::seed_scan);
    // C(7,3) == C(7,4): a tie goes to the sweep
    CHECK(cycle_costs(2, 3, 10, 3, 8).chosen == CycleStrategy::corollary_sweep);
    const auto d = cycle_costs(2, 3, 10, 3, 4);
    CHECK(d.z1 == doctest::Approx(6.0));
    CHECK(std::isinf(d.z2));
    CHECK(d.chosen == CycleStrategy::corollary_sweep);
    CHECK(cycle_costs(2, 3, 10, 3, 6).chosen == CycleStrategy::seed_scan);
    CHECK_THROWS_AS(cycle_costs(-1, 3, 10, 3, 6), std::invalid_argument);
}
