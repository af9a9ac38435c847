#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/oracle.hpp"

namespace mintest {

/// A stream of random matrices. m and n are drawn uniformly from their ranges;
/// densities cycle through the list by record index.
struct StreamConfig {
    std::size_t count = 100;
    std::size_t rows_min = 10;
    std::size_t rows_max = 12;
    std::size_t cols_min = 8;
    std::size_t cols_max = 10;
    std::vector<double> densities{0.3, 0.5, 0.7};
    std::uint64_t seed = 1;
    std::size_t oracle_ceiling = default_minimal_ceiling;
    std::size_t workers = 1;
};

struct ExperimentRecord {
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    double density = 0.0;
    std::size_t mandatory_count = 0;
    std::size_t heuristic_t0 = 0;
    std::size_t exact_t0 = 0;
    std::size_t minimal_test_count = 0;
    std::uint64_t subsets_checked_with_pruning = 0;
    std::uint64_t subsets_checked_without = 0;
    double ms_analyze = 0.0;
    double ms_search = 0.0;
    double ms_oracle = 0.0;
    /// Pruned and unpruned searches both returned the oracle's minimal tests.
    bool match = false;
    /// Non-empty when this matrix could not be processed.
    std::string error;
};

/// Analyze, search with and without pruning, and run the oracle on one matrix.
ExperimentRecord run_record(const BooleanMatrix& m, std::uint64_t seed, double density,
                            std::size_t oracle_ceiling = default_minimal_ceiling);

/// Records are ordered by index regardless of worker count.
std::vector<ExperimentRecord> run_benchmark(const StreamConfig& config);

/// Header: seed,m,n,density,mandatory_count,heuristic_t0,exact_t0,n_minimal_tests,
/// subsets_pruned,subsets_total,ms_analyze,ms_search,ms_oracle.
/// Deterministic mode drops the timestamp line and writes timings as 0.
std::string benchmark_csv(const std::vector<ExperimentRecord>& records, bool deterministic);

struct BenchmarkSummary {
    std::size_t records = 0;
    std::size_t failures = 0;
    std::size_t mismatches = 0;
    /// heuristic_t0 - exact_t0 -> count
    std::map<long long, std::size_t> heuristic_error;
    /// Records where pruning checked more subsets than the plain search.
    std::size_t pruning_violations = 0;
    /// Mean of checked_with / checked_without.
    double mean_pruning_ratio = 0.0;
};

BenchmarkSummary summarize(const std::vector<ExperimentRecord>& records);
std::string format_summary(const BenchmarkSummary& summary);

} // namespace mintest
