#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"
#include "mintest/mandatory.hpp"

namespace mintest {

struct ColumnStat {
    std::size_t column = 0;
    std::size_t ones = 0;
    std::size_t zeros = 0;
    /// ones * zeros: row pairs this column separates.
    std::size_t distinguished_pairs = 0;
    /// total_pairs - distinguished_pairs.
    std::size_t undistinguished_pairs = 0;
};

struct ColumnPairStats {
    std::size_t row_count = 0;
    std::size_t total_pairs = 0;
    std::vector<ColumnStat> columns;
};

struct RatioEntry {
    std::size_t column = 0;
    double ratio = 0.0;
};

/// Estimated minimal test length with the product trail that produced it.
///
/// Ratios undistinguished/total are sorted ascending; beta_t is the product of the t
/// smallest. t0 is the first t whose bracket closes: beta_t > 1/total >= beta_t * r_min.
struct HeuristicEstimate {
    std::size_t t0 = 0;
    double beta_t = 0.0;
    double beta_next = 0.0;
    double threshold = 0.0;
    std::vector<RatioEntry> ratio_list;
    /// beta_1 .. beta_t0
    std::vector<double> beta_sequence;
    /// No t satisfied the bracket; t0 is a fallback.
    bool degenerate = false;
};

/// Counts computed from column popcounts; the pair-difference matrix is never built.
ColumnPairStats column_pair_stats(const BooleanMatrix& m);
/// Same, restricted to the given rows (labels) and columns.
ColumnPairStats column_pair_stats(const BooleanMatrix& m, std::span<const std::size_t> labels,
                                  const ColumnSet& columns);

/// Throws std::invalid_argument when no column separates any pair.
HeuristicEstimate estimate_length(const ColumnPairStats& stats);

struct LocalEstimate {
    std::vector<std::size_t> class_indices;
    std::vector<std::size_t> union_labels;
    ColumnPairStats stats;
    std::optional<HeuristicEstimate> estimate;
    /// 0 when there is no multi-row class.
    std::size_t t0 = 0;
};

/// Indices of the two largest classes (ties: earlier class first), ascending.
std::vector<std::size_t> default_union_classes(const Partition& partition);

/// Estimate over the union of the selected classes restricted to the non-mandatory
/// columns, counting every pair of the union. Empty selection means the default.
LocalEstimate estimate_local_length(const BooleanMatrix& m, const Partition& partition,
                                    std::span<const std::size_t> class_indices = {});

inline std::size_t integral_length(std::size_t mandatory_count, std::size_t local_t0) {
    return mandatory_count + local_t0;
}

} // namespace mintest
