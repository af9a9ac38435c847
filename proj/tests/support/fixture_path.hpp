#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mintest/boolean_matrix.hpp"

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(MINTEST_FIXTURE_DIR) / name;
}

// Rows in label order, as strings.
inline std::vector<std::string> rows_by_label(const mintest::BooleanMatrix& m) {
    std::vector<std::string> out(m.row_count());
    for (std::size_t label = 1; label <= m.row_count(); ++label) out[label - 1] = m.row_string(m.position_of(label));
    return out;
}

inline std::vector<mintest::ColumnSet> to_sets(const std::vector<std::vector<std::size_t>>& lists) {
    std::vector<mintest::ColumnSet> out;
    for (const auto& l : lists) out.emplace_back(l);
    return out;
}
