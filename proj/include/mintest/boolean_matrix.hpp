#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mintest/bit_vector.hpp"
#include "mintest/column_set.hpp"

namespace mintest {

/// Unordered row pair identified by labels, normalized so that first < second.
struct RowPair {
    std::size_t first = 0;
    std::size_t second = 0;

    static RowPair of(std::size_t a, std::size_t b) { return a < b ? RowPair{a, b} : RowPair{b, a}; }
    friend bool operator==(const RowPair&, const RowPair&) = default;
    friend auto operator<=>(const RowPair&, const RowPair&) = default;
};

/// Immutable bit-packed 0/1 matrix with pairwise-distinct rows.
///
/// Rows are addressed two ways: by position (0-based storage order) and by label
/// (the row's original 1-based identifier, carried through sorting). Columns are
/// 1-based everywhere in the public interface; column c is bit c-1 of a row.
class BooleanMatrix {
public:
    /// Builds from '0'/'1' strings. Labels default to 1..m; when given they must be
    /// distinct and positive. Throws InputError on ragged/non-binary/duplicate rows.
    static BooleanMatrix from_strings(const std::vector<std::string>& rows, std::vector<std::size_t> labels = {});

    std::size_t row_count() const { return labels_.size(); }
    std::size_t col_count() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    std::size_t label(std::size_t position) const { return labels_[position]; }
    const std::vector<std::size_t>& labels() const { return labels_; }
    /// Throws InputError for a label not present in the matrix.
    std::size_t position_of(std::size_t label) const;
    bool has_label(std::size_t label) const;

    std::span<const std::uint64_t> row_words(std::size_t position) const {
        return {bits_.data() + position * words_per_row_, words_per_row_};
    }
    bool bit(std::size_t position, std::size_t column) const {
        const std::size_t i = column - 1;
        return (row_words(position)[i / 64] >> (i % 64)) & 1U;
    }
    std::size_t row_popcount(std::size_t position) const;
    std::string row_string(std::size_t position) const;
    BitVector row_bits(std::size_t position) const;

    /// Columns where the two rows differ, as a bit vector over columns.
    BitVector difference(std::size_t pos_a, std::size_t pos_b) const;
    std::size_t hamming_distance(std::size_t pos_a, std::size_t pos_b) const;
    /// True iff the rows differ in at least one column selected by mask.
    bool differ_within(std::size_t pos_a, std::size_t pos_b, const BitVector& mask) const;

    /// Mask over this matrix's columns; throws InputError on out-of-range indices.
    BitVector mask_of(const ColumnSet& columns) const;

    /// Same rows reordered: result row i is this matrix's row order[i].
    BooleanMatrix reordered(std::span<const std::size_t> order) const;

    friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

private:
    BooleanMatrix(std::size_t cols, std::vector<std::uint64_t> bits, std::vector<std::size_t> labels);

    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::size_t> labels_;
};

/// Unordered row pairs of an m-row matrix, iterated lexicographically by label.
struct PairIndex {
    std::size_t rows = 0;

    std::size_t total_pairs() const { return rows < 2 ? 0 : rows * (rows - 1) / 2; }
};

/// Row projection onto a column subset. Projected rows may coincide.
struct Projection {
    ColumnSet columns;
    std::vector<std::size_t> labels;
    std::vector<std::string> rows;
};

/// Parses the matrix text format: one row of '0'/'1' per line, '#' comment lines,
/// trailing blank lines ignored. Labels are 1..m in file order.
BooleanMatrix load_matrix(std::string_view text);
BooleanMatrix load_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const BooleanMatrix& m);

/// Non-fatal findings: equal column pairs (the matrix is still usable).
std::vector<std::string> validation_warnings(const BooleanMatrix& m);

/// Popcount of every row, keyed by row label.
std::map<std::size_t, std::size_t> row_popcounts(const BooleanMatrix& m);

/// Rows ascending as n-bit numbers with column 1 the most significant bit.
BooleanMatrix sort_rows_by_binary_value(const BooleanMatrix& m);

ColumnSet distinguishing_columns(const BooleanMatrix& m, std::size_t label_a, std::size_t label_b);

/// True iff the rows restricted to the columns are pairwise distinct.
bool is_test(const BooleanMatrix& m, const ColumnSet& columns);
bool is_test(const BooleanMatrix& m, const BitVector& mask);

Projection project(const BooleanMatrix& m, const ColumnSet& columns);

/// Among the given row positions, the first pair (by position order after a stable
/// sort on the masked rows) whose masked rows coincide, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_colliding_pair(const BooleanMatrix& m,
                                                                     std::span<const std::size_t> positions,
                                                                     const BitVector& mask);

/// Groups of positions whose masked rows coincide (only groups of size >= 2).
/// Each group is ascending by position; groups ordered by their first position.
std::vector<std::vector<std::size_t>> colliding_groups(const BooleanMatrix& m,
                                                       std::span<const std::size_t> positions,
                                                       const BitVector& mask);

} // namespace mintest
