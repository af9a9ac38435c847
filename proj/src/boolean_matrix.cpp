#include "mintest/boolean_matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mintest/errors.hpp"

namespace mintest {
namespace {

// Lexicographic comparison of two masked rows, column 1 first.
int compare_masked(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                   std::span<const std::uint64_t> mask) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        const std::uint64_t x = (a[w] ^ b[w]) & mask[w];
        if (x != 0) {
            const std::uint64_t low = x & (~x + 1);
            return (a[w] & low) ? 1 : -1;
        }
    }
    return 0;
}

std::vector<std::uint64_t> pack_rows(const std::vector<std::string>& rows, std::size_t cols,
                                     std::span<const std::size_t> line_numbers) {
    const std::size_t wpr = BitVector::word_count(cols);
    std::vector<std::uint64_t> bits(rows.size() * wpr, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto line = line_numbers.empty() ? r + 1 : line_numbers[r];
        if (rows[r].size() != cols)
            throw InputError("line " + std::to_string(line) + ": expected " + std::to_string(cols) + " cells, got " +
                             std::to_string(rows[r].size()));
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch == '1')
                bits[r * wpr + c / 64] |= std::uint64_t{1} << (c % 64);
            else if (ch != '0')
                throw InputError("line " + std::to_string(line) + ": non-binary character '" + std::string(1, ch) +
                                 "'");
        }
    }
    std::unordered_map<std::string_view, std::size_t> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [it, inserted] = seen.emplace(rows[r], r);
        if (!inserted) {
            const auto first = line_numbers.empty() ? it->second + 1 : line_numbers[it->second];
            const auto second = line_numbers.empty() ? r + 1 : line_numbers[r];
            throw InputError("duplicate rows at lines " + std::to_string(first) + " and " + std::to_string(second));
        }
    }
    return bits;
}

} // namespace

BooleanMatrix::BooleanMatrix(std::size_t cols, std::vector<std::uint64_t> bits, std::vector<std::size_t> labels)
    : cols_(cols), words_per_row_(BitVector::word_count(cols)), bits_(std::move(bits)), labels_(std::move(labels)) {}

BooleanMatrix BooleanMatrix::from_strings(const std::vector<std::string>& rows, std::vector<std::size_t> labels) {
    if (rows.empty()) throw InputError("matrix has no rows");
    const std::size_t cols = rows.front().size();
    if (cols == 0) throw InputError("matrix has no columns");
    if (labels.empty()) {
        labels.resize(rows.size());
        std::iota(labels.begin(), labels.end(), std::size_t{1});
    }
    if (labels.size() != rows.size()) throw InputError("label count does not match row count");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 0) throw InputError("row labels are 1-based");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate row label");
    auto bits = pack_rows(rows, cols, {});
    return BooleanMatrix(cols, std::move(bits), std::move(labels));
}

std::size_t BooleanMatrix::position_of(std::size_t label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("unknown row label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

bool BooleanMatrix::has_label(std::size_t label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t BooleanMatrix::row_popcount(std::size_t position) const {
    std::size_t c = 0;
    for (auto w : row_words(position)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BooleanMatrix::row_string(std::size_t position) const {
    std::string s(cols_, '0');
    for (std::size_t c = 1; c <= cols_; ++c)
        if (bit(position, c)) s[c - 1] = '1';
    return s;
}

BitVector BooleanMatrix::row_bits(std::size_t position) const {
    BitVector v(cols_);
    std::copy(row_words(position).begin(), row_words(position).end(), v.words().begin());
    return v;
}

BitVector BooleanMatrix::difference(std::size_t pos_a, std::size_t pos_b) const {
    BitVector v(cols_);
    auto a = row_words(pos_a);
    auto b = row_words(pos_b);
    auto out = v.words();
    for (std::size_t w = 0; w < words_per_row_; ++w) out[w] = a[w] ^ b[w];
    return v;
}

std::size_t BooleanMatrix::hamming_distance(std::size_t pos_a, std::size_t pos_b) const {
    auto a = row_words(pos_a);
    auto b = row_words(pos_b);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w) d += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
    return d;
}

bool BooleanMatrix::differ_within(std::size_t pos_a, std::size_t pos_b, const BitVector& mask) const {
    auto a = row_words(pos_a);
    auto b = row_words(pos_b);
    auto m = mask.words();
    for (std::size_t w = 0; w < words_per_row_; ++w)
        if ((a[w] ^ b[w]) & m[w]) return true;
    return false;
}

BitVector BooleanMatrix::mask_of(const ColumnSet& columns) const {
    BitVector mask(cols_);
    for (auto c : columns) {
        if (c == 0 || c > cols_)
            throw InputError("column " + std::to_string(c) + " out of range 1.." + std::to_string(cols_));
        mask.set(c - 1);
    }
    return mask;
}

BooleanMatrix BooleanMatrix::reordered(std::span<const std::size_t> order) const {
    std::vector<std::uint64_t> bits;
    bits.reserve(bits_.size());
    std::vector<std::size_t> labels;
    labels.reserve(order.size());
    for (auto pos : order) {
        auto w = row_words(pos);
        bits.insert(bits.end(), w.begin(), w.end());
        labels.push_back(labels_[pos]);
    }
    return BooleanMatrix(cols_, std::move(bits), std::move(labels));
}

BooleanMatrix load_matrix(std::string_view text) {
    std::vector<std::string> rows;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;
    std::size_t pending_blank = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') {
            // comment
        } else if (line.empty()) {
            if (end < text.size()) pending_blank = line_no;
        } else {
            if (pending_blank != 0)
                throw InputError("line " + std::to_string(pending_blank) + ": blank line inside matrix");
            rows.emplace_back(line);
            line_numbers.push_back(line_no);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (rows.empty()) throw InputError("matrix has no rows");
    // Validate first so errors carry file line numbers.
    pack_rows(rows, rows.front().size(), line_numbers);
    return BooleanMatrix::from_strings(rows);
}

BooleanMatrix load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open matrix file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_matrix(buf.str());
}

std::string format_matrix(const BooleanMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        out += m.row_string(r);
        out += '\n';
    }
    return out;
}

std::vector<std::string> validation_warnings(const BooleanMatrix& m) {
    std::vector<std::string> warnings;
    const std::size_t n = m.col_count();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            bool equal = true;
            for (std::size_t r = 0; r < m.row_count() && equal; ++r) equal = m.bit(r, i) == m.bit(r, j);
            if (equal) warnings.push_back("columns " + std::to_string(i) + " and " + std::to_string(j) + " are equal");
        }
    return warnings;
}

std::map<std::size_t, std::size_t> row_popcounts(const BooleanMatrix& m) {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t r = 0; r < m.row_count(); ++r) out[m.label(r)] = m.row_popcount(r);
    return out;
}

BooleanMatrix sort_rows_by_binary_value(const BooleanMatrix& m) {
    std::vector<std::size_t> order(m.row_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    BitVector all(m.col_count());
    for (std::size_t c = 0; c < m.col_count(); ++c) all.set(c);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_masked(m.row_words(a), m.row_words(b), all.words()) < 0;
    });
    return m.reordered(order);
}

ColumnSet distinguishing_columns(const BooleanMatrix& m, std::size_t label_a, std::size_t label_b) {
    if (label_a == label_b) throw InputError("distinguishing_columns needs two different rows");
    const auto diff = m.difference(m.position_of(label_a), m.position_of(label_b));
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < m.col_count(); ++c)
        if (diff.test(c)) cols.push_back(c + 1);
    return ColumnSet(std::move(cols));
}

bool is_test(const BooleanMatrix& m, const ColumnSet& columns) {
    if (columns.empty()) return m.row_count() < 2;
    return is_test(m, m.mask_of(columns));
}

bool is_test(const BooleanMatrix& m, const BitVector& mask) {
    std::vector<std::size_t> all(m.row_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return !find_colliding_pair(m, all, mask).has_value();
}

Projection project(const BooleanMatrix& m, const ColumnSet& columns) {
    m.mask_of(columns);  // range check
    Projection p;
    p.columns = columns;
    p.labels = m.labels();
    p.rows.reserve(m.row_count());
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::string s;
        s.reserve(columns.size());
        for (auto c : columns) s += m.bit(r, c) ? '1' : '0';
        p.rows.push_back(std::move(s));
    }
    return p;
}

std::optional<std::pair<std::size_t, std::size_t>> find_colliding_pair(const BooleanMatrix& m,
                                                                     std::span<const std::size_t> positions,
                                                                     const BitVector& mask) {
    const std::size_t k = positions.size();
    if (k < 2) return std::nullopt;
    if (k <= 16) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (!m.differ_within(positions[i], positions[j], mask)) return std::pair{positions[i], positions[j]};
        return std::nullopt;
    }
    std::vector<std::size_t> order(positions.begin(), positions.end());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_masked(m.row_words(a), m.row_words(b), mask.words()) < 0;
    });
    for (std::size_t i = 1; i < k; ++i)
        if (!m.differ_within(order[i - 1], order[i], mask))
            return std::pair{std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])};
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> colliding_groups(const BooleanMatrix& m,
                                                       std::span<const std::size_t> positions,
                                                       const BitVector& mask) {
    std::vector<std::size_t> order(positions.begin(), positions.end());
    std::sort(order.begin(), order.end());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_masked(m.row_words(a), m.row_words(b), mask.words()) < 0;
    });
    std::vector<std::vector<std::size_t>> groups;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && !m.differ_within(order[i], order[j], mask)) ++j;
        if (j - i >= 2) groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                                            order.begin() + static_cast<std::ptrdiff_t>(j));
        i = j;
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

} // namespace mintest
