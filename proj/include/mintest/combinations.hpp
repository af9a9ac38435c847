#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace mintest {

/// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t num = n - k + i;
        const std::uint64_t a = r / g;
        const std::uint64_t b = i / g;
        if (a > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = a * num / b;
    }
    return r;
}

/// Visits every k-subset of {0, ..., n-1} in colexicographic order. The visitor gets
/// the ascending index list and returns false to stop early. Returns false iff stopped.
template <class Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!visit(std::span<const std::size_t>(idx))) return false;
        std::size_t i = 0;
        while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : n)) ++i;
        if (i == k) return true;
        ++idx[i];
        for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    }
}

} // namespace mintest
