#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"

namespace mintest {

/// Ground truth from plain subset enumeration. Lists are sorted lexicographically.
struct OracleResult {
    std::size_t min_length = 0;
    std::vector<ColumnSet> minimal_tests;
    std::optional<std::vector<ColumnSet>> deadend_tests;
    std::uint64_t subsets_checked = 0;
};

inline constexpr std::size_t default_minimal_ceiling = 22;
inline constexpr std::size_t default_deadend_ceiling = 16;

/// Sizes ascending; stops at the first size that holds a test.
/// Throws CeilingError when the matrix has more than n_ceiling columns.
OracleResult oracle_minimal_tests(const BooleanMatrix& m, std::size_t n_ceiling = default_minimal_ceiling);

/// Every subset whose one-smaller subsets are all non-tests; also fills the minimal fields.
OracleResult oracle_deadend_tests(const BooleanMatrix& m, std::size_t n_ceiling = default_deadend_ceiling);

} // namespace mintest
