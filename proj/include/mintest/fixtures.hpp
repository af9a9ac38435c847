#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "mintest/boolean_matrix.hpp"
#include "mintest/column_set.hpp"

namespace mintest {

/// Classes of a larger matrix given only by their rows: each row carries its key on the
/// mandatory columns, its values on the local columns and its original label.
///
///     columns: 10
///     mandatory: 2 3 4 6 7 10
///     local: 1 5 8 9
///     source_rows: 50
///     101101 1111 33 M1
///
/// Cells outside mandatory and local columns are 0.
struct ClassFixture {
    std::size_t col_count = 0;
    ColumnSet mandatory;
    ColumnSet local_columns;
    /// Row count of the matrix the classes were cut from.
    std::size_t source_rows = 0;
    BooleanMatrix matrix;
    /// Display name per class key, when given.
    std::map<std::string, std::string> class_names;
};

ClassFixture load_class_fixture(std::string_view text);
ClassFixture load_class_fixture_file(const std::filesystem::path& path);

} // namespace mintest
