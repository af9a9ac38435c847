#include "mintest/column_set.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>

namespace mintest {

ColumnSet::ColumnSet(std::initializer_list<std::size_t> columns) : ColumnSet(std::vector<std::size_t>(columns)) {}

ColumnSet::ColumnSet(std::vector<std::size_t> columns) : columns_(std::move(columns)) {
    std::sort(columns_.begin(), columns_.end());
    if (!columns_.empty() && columns_.front() == 0)
        throw std::invalid_argument("column indices are 1-based");
    if (std::adjacent_find(columns_.begin(), columns_.end()) != columns_.end())
        throw std::invalid_argument("duplicate column index");
}

ColumnSet ColumnSet::all(std::size_t n) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i + 1;
    return ColumnSet(std::move(cols));
}

ColumnSet ColumnSet::parse(std::string_view text) {
    std::vector<std::size_t> cols;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{}) throw std::invalid_argument("bad column index in '" + std::string(text) + "'");
            cols.push_back(value);
            i = static_cast<std::size_t>(ptr - text.data());
        } else if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')' || c == '{' || c == '}') {
            ++i;
        } else {
            throw std::invalid_argument("unexpected character in column list '" + std::string(text) + "'");
        }
    }
    return ColumnSet(std::move(cols));
}

bool ColumnSet::contains(std::size_t column) const {
    return std::binary_search(columns_.begin(), columns_.end(), column);
}

ColumnSet ColumnSet::united(const ColumnSet& other) const {
    ColumnSet out;
    std::set_union(columns_.begin(), columns_.end(), other.columns_.begin(), other.columns_.end(),
                   std::back_inserter(out.columns_));
    return out;
}

ColumnSet ColumnSet::without(const ColumnSet& other) const {
    ColumnSet out;
    std::set_difference(columns_.begin(), columns_.end(), other.columns_.begin(), other.columns_.end(),
                        std::back_inserter(out.columns_));
    return out;
}

ColumnSet ColumnSet::without(std::size_t column) const {
    ColumnSet out = *this;
    std::erase(out.columns_, column);
    return out;
}

bool ColumnSet::is_subset_of(const ColumnSet& other) const {
    return std::includes(other.columns_.begin(), other.columns_.end(), columns_.begin(), columns_.end());
}

std::string ColumnSet::to_string(std::string_view separator) const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(columns_[i]);
    }
    return out;
}

} // namespace mintest
