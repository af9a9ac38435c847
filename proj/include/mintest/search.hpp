#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"
#include "mintest/length_heuristic.hpp"
#include "mintest/mandatory.hpp"
#include "mintest/oracle.hpp"
#include "mintest/pruning.hpp"

namespace mintest {

struct SearchConfig {
    /// Start at the estimated length; otherwise climb from log2 of the largest class.
    bool use_heuristic = true;
    /// Skip candidates that extend a repeated-projection seed (p >= 3) by one column.
    bool theorem2 = true;
    /// Collapse equal/complementary columns to one representative while searching.
    bool bijective = true;
    /// Stop at one certified minimal test instead of listing all of them.
    bool first_only = false;
    /// Column ceiling for searches without the heuristic.
    std::size_t search_ceiling = default_minimal_ceiling;
    /// Classes whose union feeds the local estimate; empty selects the two largest.
    std::vector<std::size_t> local_union_classes;
};

struct SearchStats {
    /// Candidate subsets evaluated against the classes.
    std::uint64_t subsets_checked = 0;
    /// Candidate subsets of all non-mandatory columns at the visited lengths.
    std::uint64_t subsets_total = 0;
    std::uint64_t pruned_theorem2 = 0;
    std::uint64_t pruned_bijective = 0;
    /// Subsets scanned while collecting seeds (not candidates).
    std::uint64_t seed_scan_subsets = 0;
    std::size_t class_count = 0;
    /// Local lengths in visiting order.
    std::vector<std::size_t> levels_visited;
    /// Per visited level in --first mode: whether the seed route was chosen.
    std::vector<CycleStrategy> strategies;
};

struct Correction {
    std::size_t old_length = 0;
    std::size_t new_length = 0;
    std::string reason;
};

struct DeadendWitness {
    std::size_t column = 0;
    /// A row pair separated by this column and by no other column of the test.
    std::optional<RowPair> pair;
};

struct DeadendCheck {
    bool deadend = false;
    std::vector<DeadendWitness> witnesses;
    /// On failure: a column whose removal leaves a test.
    std::optional<std::size_t> removable_column;
};

/// Requires is_test(m, test); throws InputError otherwise.
DeadendCheck is_deadend(const BooleanMatrix& m, const ColumnSet& test);
/// Every row pair separated by `column` alone within `test`, lexicographic by label.
std::vector<RowPair> deadend_witness_pairs(const BooleanMatrix& m, const ColumnSet& test, std::size_t column);
/// Drops redundant columns, highest index first, until the test is dead-end.
ColumnSet deadend_reduce(const BooleanMatrix& m, const ColumnSet& test);

struct LocalSearchResult {
    std::size_t local_length = 0;
    /// Local parts only (no mandatory columns), lexicographic.
    std::vector<ColumnSet> local_tests;
    SearchStats stats;
    std::vector<Correction> corrections;
};

/// Finds the shortest subsets of `candidates` that separate every class of the partition,
/// starting at `start_length` and correcting up or down. Correction lengths are reported
/// as local length plus partition.mandatory.size().
LocalSearchResult search_local_tests(const BooleanMatrix& m, const Partition& partition, const ColumnSet& candidates,
                                     const SearchConfig& config, std::size_t start_length);

/// log2 of the largest class, rounded up: fewer columns cannot separate that class.
std::size_t information_bound(const Partition& partition);

struct TestReport {
    std::size_t minimal_length = 0;
    ColumnSet mandatory;
    /// Each of size minimal_length, lexicographic, duplicate-free.
    std::vector<ColumnSet> minimal_tests;
    std::vector<bool> deadend_verified;
    /// False in --first mode.
    bool complete = true;
    std::optional<HeuristicEstimate> global_estimate;
    LocalEstimate local_estimate;
    /// Length the search started from.
    std::size_t start_length = 0;
    SearchStats stats;
    std::vector<Correction> corrections;
};

/// Sort rows, find mandatory columns, partition, estimate, search, verify.
/// Throws CeilingError when the heuristic is off and the matrix exceeds config.search_ceiling.
TestReport enumerate_minimal_tests(const BooleanMatrix& m, const SearchConfig& config = {});

enum class Minimality { yes, no, unknown };

struct TestVerdict {
    bool is_test = false;
    std::optional<bool> is_deadend;
    Minimality minimal = Minimality::unknown;
    std::optional<std::size_t> min_length;
    std::optional<std::size_t> estimated_length;
    std::string note;
};

/// Minimality through the oracle when the matrix has at most oracle_ceiling columns,
/// otherwise "unknown" with the heuristic length for comparison.
TestVerdict verify_test(const BooleanMatrix& m, const ColumnSet& test,
                        std::size_t oracle_ceiling = default_minimal_ceiling);

} // namespace mintest
