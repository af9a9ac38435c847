#include "mintest/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "mintest/errors.hpp"

namespace mintest {
namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

} // namespace

ClassFixture load_class_fixture(std::string_view text) {
    struct {
        std::size_t col_count = 0;
        ColumnSet mandatory;
        ColumnSet local_columns;
        std::size_t source_rows = 0;
        std::map<std::string, std::string> class_names;
    } fx;
    std::vector<std::string> rows;
    std::vector<std::size_t> labels;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) { throw InputError("line " + std::to_string(line_no) + ": " + what); };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (auto colon = line.find(':'); colon != std::string::npos) {
            const std::string key = trim(std::string_view(line).substr(0, colon));
            const std::string value = trim(std::string_view(line).substr(colon + 1));
            try {
                if (key == "columns")
                    fx.col_count = std::stoul(value);
                else if (key == "mandatory")
                    fx.mandatory = ColumnSet::parse(value);
                else if (key == "local")
                    fx.local_columns = ColumnSet::parse(value);
                else if (key == "source_rows")
                    fx.source_rows = std::stoul(value);
                else
                    fail("unknown directive '" + key + "'");
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            continue;
        }
        if (fx.col_count == 0) fail("row before 'columns:' directive");
        std::istringstream fields(line);
        std::string key, local, name;
        std::size_t label = 0;
        if (!(fields >> key >> local >> label)) fail("expected '<key> <local bits> <label> [name]'");
        fields >> name;
        if (key.size() != fx.mandatory.size()) fail("key length does not match mandatory columns");
        if (local.size() != fx.local_columns.size()) fail("local bits do not match local columns");
        std::string row(fx.col_count, '0');
        auto place = [&](const ColumnSet& cols, const std::string& bits) {
            std::size_t i = 0;
            for (auto c : cols) {
                if (c > fx.col_count) fail("column " + std::to_string(c) + " beyond 'columns:'");
                if (bits[i] != '0' && bits[i] != '1') fail("non-binary character");
                row[c - 1] = bits[i++];
            }
        };
        place(fx.mandatory, key);
        place(fx.local_columns, local);
        if (!name.empty()) fx.class_names.emplace(key, name);
        rows.push_back(std::move(row));
        labels.push_back(label);
    }
    if (fx.mandatory.without(fx.local_columns).size() != fx.mandatory.size())
        throw InputError("mandatory and local columns overlap");
    if (rows.empty()) throw InputError("class fixture has no rows");
    return ClassFixture{fx.col_count,  fx.mandatory, fx.local_columns, fx.source_rows,
                        BooleanMatrix::from_strings(rows, std::move(labels)), std::move(fx.class_names)};
}

ClassFixture load_class_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open class fixture " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_class_fixture(buf.str());
}

} // namespace mintest
