#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"
#include "mintest/mandatory.hpp"

namespace mintest {

/// Rows (labels, ascending) whose projections onto `columns` coincide.
struct IdenticalProjectionGroup {
    ColumnSet columns;
    std::vector<std::size_t> rows;

    std::size_t multiplicity() const { return rows.size(); }
};

/// Whole-matrix grouping; empty iff `columns` is a test.
std::vector<IdenticalProjectionGroup> identical_projection_groups(const BooleanMatrix& m, const ColumnSet& columns);
/// Grouping restricted to the given rows (labels), e.g. one class.
std::vector<IdenticalProjectionGroup> identical_projection_groups(const BooleanMatrix& m,
                                                                  std::span<const std::size_t> labels,
                                                                  const ColumnSet& columns);

struct CollisionWitness {
    std::size_t class_index = 0;
    RowPair pair;
};

struct SubsetVerdict {
    ColumnSet columns;
    /// Set when the subset leaves a colliding pair inside some class.
    std::optional<CollisionWitness> witness;
};

struct SweepResult {
    bool all_fail = false;
    /// Lexicographic by column list.
    std::vector<SubsetVerdict> subsets;
};

/// Checks every k-subset of `candidates` against the classes. When all fail, tests
/// need more than k of these columns on top of the mandatory ones.
SweepResult all_k_subsets_fail(const BooleanMatrix& m, const Partition& partition, const ColumnSet& candidates,
                               std::size_t k);

struct SeedEntry {
    ColumnSet columns;
    std::size_t class_index = 0;
    /// Largest coinciding group in this class (labels ascending).
    std::vector<std::size_t> rows;
};

/// k-subsets whose projection repeats at least p_min times inside a class. No
/// (k+1)-column extension of a seed separates that class. Listed lexicographically
/// by columns, then by class. Throws std::invalid_argument for p_min < 3 or k == 0.
std::vector<SeedEntry> theorem2_seeds(const BooleanMatrix& m, const Partition& partition,
                                      const ColumnSet& candidates, std::size_t k, std::size_t p_min = 3);

/// p(p-1)/2
std::size_t pair_count(std::size_t p);
/// floor(p^2/4): most pairs one column can split among p equal rows.
std::size_t max_split_pairs(std::size_t p);
/// Pairs still equal after adding any single column to p coinciding rows.
/// Throws std::invalid_argument for p < 2.
std::size_t residual_pairs_lower_bound(std::size_t p);

struct ColumnRelation {
    std::size_t first = 0;
    std::size_t second = 0;
    bool complement = false;

    friend bool operator==(const ColumnRelation&, const ColumnRelation&) = default;
};

/// Column pairs that are equal or complementary. A dead-end test holds at most one of each.
std::vector<ColumnRelation> bijective_column_pairs(const BooleanMatrix& m);

enum class CycleStrategy { corollary_sweep, seed_scan };

struct CycleCost {
    double z1 = 0.0;
    double z2 = 0.0;
    CycleStrategy chosen = CycleStrategy::corollary_sweep;
};

/// Z1 = k*p*C(n - t_ob, t0 - t_ob - 1), Z2 = k*p*C(n - t_ob, t0 - t_ob - 2).
/// An undefined binomial costs infinity. Ties choose Z1.
/// Throws std::invalid_argument on negative arguments.
CycleCost cycle_costs(std::int64_t k, std::int64_t p, std::int64_t n, std::int64_t t_ob, std::int64_t t0);

} // namespace mintest
