#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"

namespace mintest {

/// Columns contained in every test, each with the row pairs that only it separates.
struct MandatoryResult {
    ColumnSet mandatory;
    std::map<std::size_t, std::vector<RowPair>> witnesses;
    std::size_t pairs_examined = 0;
};

/// Rows sharing one value vector on the mandatory columns.
struct RowClass {
    /// '0'/'1' per mandatory column, ascending column order.
    std::string key;
    /// Row labels, ascending.
    std::vector<std::size_t> members;

    std::size_t pair_count() const { return members.size() * (members.size() - 1) / 2; }
};

struct Partition {
    ColumnSet mandatory;
    /// Multi-row classes ordered by key read as a binary number.
    std::vector<RowClass> classes;
    /// Rows alone in their class; already separated from everything by the mandatory columns.
    std::vector<std::size_t> dropped_singletons;

    std::size_t within_class_pairs() const;
    std::size_t largest_class() const;
};

struct RefinementResult {
    MandatoryResult mandatory;
    Partition partition;
    std::size_t iterations = 0;
    std::size_t first_pass_pairs = 0;
    std::size_t in_class_pairs = 0;
};

/// Row pairs whose popcounts differ by exactly one, found through popcount buckets.
/// Ordered lexicographically by label.
std::vector<RowPair> candidate_pairs(const BooleanMatrix& m);

/// Complete scan of the candidate pairs for Hamming-distance-1 pairs.
MandatoryResult find_mandatory(const BooleanMatrix& m);

Partition partition_by_mandatory(const BooleanMatrix& m, const ColumnSet& mandatory);

/// Staged search: scan the binary-sorted matrix until `first_pass_quota` witness pairs
/// are found, partition, then search within classes and re-partition until no new
/// mandatory column appears.
RefinementResult refine_mandatory(const BooleanMatrix& m, std::size_t first_pass_quota = 3);

} // namespace mintest
