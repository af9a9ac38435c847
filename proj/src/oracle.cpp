#include "mintest/oracle.hpp"

#include <algorithm>

#include "mintest/combinations.hpp"
#include "mintest/errors.hpp"

namespace mintest {
namespace {

void check_ceiling(const BooleanMatrix& m, std::size_t ceiling) {
    if (m.col_count() > ceiling)
        throw CeilingError("oracle limited to " + std::to_string(ceiling) + " columns, matrix has " +
                           std::to_string(m.col_count()));
}

ColumnSet from_bits(std::uint64_t bits) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; bits != 0; ++c, bits >>= 1)
        if (bits & 1U) cols.push_back(c + 1);
    return ColumnSet(std::move(cols));
}

} // namespace

OracleResult oracle_minimal_tests(const BooleanMatrix& m, std::size_t n_ceiling) {
    check_ceiling(m, n_ceiling);
    OracleResult out;
    const std::size_t n = m.col_count();
    for (std::size_t k = 0; k <= n; ++k) {
        for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
            BitVector mask(n);
            for (auto i : idx) mask.set(i);
            ++out.subsets_checked;
            if (is_test(m, mask)) {
                std::vector<std::size_t> cols;
                for (auto i : idx) cols.push_back(i + 1);
                out.minimal_tests.emplace_back(std::move(cols));
            }
            return true;
        });
        if (!out.minimal_tests.empty()) {
            out.min_length = k;
            std::sort(out.minimal_tests.begin(), out.minimal_tests.end());
            return out;
        }
    }
    return out;  // unreachable for a matrix with distinct rows
}

OracleResult oracle_deadend_tests(const BooleanMatrix& m, std::size_t n_ceiling) {
    check_ceiling(m, std::min<std::size_t>(n_ceiling, 30));
    const std::size_t n = m.col_count();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<bool> test(subsets);
    OracleResult out;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        BitVector mask(n);
        mask.words()[0] = s;
        test[s] = is_test(m, mask);
        ++out.subsets_checked;
    }
    std::vector<ColumnSet> deadend;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        if (!test[s]) continue;
        bool irredundant = true;
        for (std::uint64_t b = s; b != 0 && irredundant; b &= b - 1) irredundant = !test[s & ~(b & (~b + 1))];
        if (irredundant) deadend.push_back(from_bits(s));
    }
    std::sort(deadend.begin(), deadend.end());
    std::size_t best = n + 1;
    for (const auto& t : deadend) best = std::min(best, t.size());
    out.min_length = best;
    for (const auto& t : deadend)
        if (t.size() == best) out.minimal_tests.push_back(t);
    out.deadend_tests = std::move(deadend);
    return out;
}

} // namespace mintest
