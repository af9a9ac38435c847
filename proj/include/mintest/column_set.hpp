#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mintest {

/// A set of 1-based column indices kept in ascending order. Candidate or confirmed test.
class ColumnSet {
public:
    ColumnSet() = default;
    ColumnSet(std::initializer_list<std::size_t> columns);
    /// Sorts the input; throws std::invalid_argument on index 0 or duplicates.
    explicit ColumnSet(std::vector<std::size_t> columns);

    /// {1, ..., n}
    static ColumnSet all(std::size_t n);
    /// Accepts "1,2,4", "1 2 4" or "(1,2,4)".
    static ColumnSet parse(std::string_view text);

    std::size_t size() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }
    bool contains(std::size_t column) const;
    std::size_t max_column() const { return columns_.empty() ? 0 : columns_.back(); }

    auto begin() const { return columns_.begin(); }
    auto end() const { return columns_.end(); }
    const std::vector<std::size_t>& columns() const { return columns_; }

    ColumnSet united(const ColumnSet& other) const;
    ColumnSet without(const ColumnSet& other) const;
    ColumnSet without(std::size_t column) const;
    bool is_subset_of(const ColumnSet& other) const;

    std::string to_string(std::string_view separator = ",") const;

    friend bool operator==(const ColumnSet&, const ColumnSet&) = default;
    friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;

private:
    std::vector<std::size_t> columns_;
};

} // namespace mintest
