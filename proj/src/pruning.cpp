#include "mintest/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mintest/combinations.hpp"

namespace mintest {
namespace {

std::vector<std::vector<std::size_t>> class_positions(const BooleanMatrix& m, const Partition& partition) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(partition.classes.size());
    for (const auto& cls : partition.classes) {
        std::vector<std::size_t> pos;
        for (auto l : cls.members) pos.push_back(m.position_of(l));
        out.push_back(std::move(pos));
    }
    return out;
}

std::vector<std::size_t> labels_of(const BooleanMatrix& m, std::span<const std::size_t> positions) {
    std::vector<std::size_t> out;
    for (auto p : positions) out.push_back(m.label(p));
    std::sort(out.begin(), out.end());
    return out;
}

ColumnSet subset_of(const std::vector<std::size_t>& cols, std::span<const std::size_t> idx) {
    std::vector<std::size_t> picked;
    for (auto i : idx) picked.push_back(cols[i]);
    return ColumnSet(std::move(picked));
}

double binomial_or_inf(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return std::numeric_limits<double>::infinity();
    return static_cast<double>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
}

} // namespace

std::vector<IdenticalProjectionGroup> identical_projection_groups(const BooleanMatrix& m, const ColumnSet& columns) {
    return identical_projection_groups(m, m.labels(), columns);
}

std::vector<IdenticalProjectionGroup> identical_projection_groups(const BooleanMatrix& m,
                                                                  std::span<const std::size_t> labels,
                                                                  const ColumnSet& columns) {
    const auto mask = m.mask_of(columns);
    std::vector<std::size_t> positions;
    for (auto l : labels) positions.push_back(m.position_of(l));
    std::vector<IdenticalProjectionGroup> out;
    for (const auto& g : colliding_groups(m, positions, mask)) out.push_back({columns, labels_of(m, g)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rows < b.rows; });
    return out;
}

SweepResult all_k_subsets_fail(const BooleanMatrix& m, const Partition& partition, const ColumnSet& candidates,
                               std::size_t k) {
    const auto classes = class_positions(m, partition);
    const auto& cols = candidates.columns();
    m.mask_of(candidates);
    SweepResult out;
    out.all_fail = true;
    for_each_combination(cols.size(), k, [&](std::span<const std::size_t> idx) {
        SubsetVerdict v{subset_of(cols, idx), std::nullopt};
        const auto mask = m.mask_of(v.columns);
        for (std::size_t ci = 0; ci < classes.size() && !v.witness; ++ci)
            if (auto hit = find_colliding_pair(m, classes[ci], mask))
                v.witness = CollisionWitness{ci, RowPair::of(m.label(hit->first), m.label(hit->second))};
        if (!v.witness) out.all_fail = false;
        out.subsets.push_back(std::move(v));
        return true;
    });
    std::sort(out.subsets.begin(), out.subsets.end(),
              [](const SubsetVerdict& a, const SubsetVerdict& b) { return a.columns < b.columns; });
    return out;
}

std::vector<SeedEntry> theorem2_seeds(const BooleanMatrix& m, const Partition& partition,
                                      const ColumnSet& candidates, std::size_t k, std::size_t p_min) {
    if (p_min < 3) throw std::invalid_argument("seed multiplicity must be at least 3");
    if (k == 0) throw std::invalid_argument("seed size must be at least 1");
    const auto classes = class_positions(m, partition);
    const auto& cols = candidates.columns();
    m.mask_of(candidates);
    std::vector<SeedEntry> out;
    for_each_combination(cols.size(), k, [&](std::span<const std::size_t> idx) {
        const ColumnSet subset = subset_of(cols, idx);
        const auto mask = m.mask_of(subset);
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            if (classes[ci].size() < p_min) continue;
            const std::vector<std::size_t>* best = nullptr;
            const auto groups = colliding_groups(m, classes[ci], mask);
            for (const auto& g : groups)
                if (g.size() >= p_min && (!best || g.size() > best->size())) best = &g;
            if (best) out.push_back({subset, ci, labels_of(m, *best)});
        }
        return true;
    });
    std::stable_sort(out.begin(), out.end(), [](const SeedEntry& a, const SeedEntry& b) {
        return a.columns != b.columns ? a.columns < b.columns : a.class_index < b.class_index;
    });
    return out;
}

std::size_t pair_count(std::size_t p) { return p < 2 ? 0 : p * (p - 1) / 2; }

std::size_t max_split_pairs(std::size_t p) { return (p * p) / 4; }

std::size_t residual_pairs_lower_bound(std::size_t p) {
    if (p < 2) throw std::invalid_argument("residual pair bound needs p >= 2");
    return pair_count(p) - max_split_pairs(p);
}

std::vector<ColumnRelation> bijective_column_pairs(const BooleanMatrix& m) {
    const std::size_t n = m.col_count();
    const std::size_t rows = m.row_count();
    std::vector<BitVector> columns(n, BitVector(rows));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 1; c <= n; ++c)
            if (m.bit(r, c)) columns[c - 1].set(r);
    BitVector all(rows);
    for (std::size_t r = 0; r < rows; ++r) all.set(r);
    std::vector<ColumnRelation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (columns[i] == columns[j])
                out.push_back({i + 1, j + 1, false});
            else if ((columns[i] ^ all) == columns[j])
                out.push_back({i + 1, j + 1, true});
        }
    return out;
}

CycleCost cycle_costs(std::int64_t k, std::int64_t p, std::int64_t n, std::int64_t t_ob, std::int64_t t0) {
    if (k < 0 || p < 0 || n < 0 || t_ob < 0 || t0 < 0) throw std::invalid_argument("cycle costs need non-negative arguments");
    const double scale = static_cast<double>(k) * static_cast<double>(p);
    const auto cost = [&](std::int64_t choose) {
        const double b = binomial_or_inf(n - t_ob, choose);
        return std::isinf(b) ? b : scale * b;
    };
    CycleCost c;
    c.z1 = cost(t0 - t_ob - 1);
    c.z2 = cost(t0 - t_ob - 2);
    c.chosen = c.z2 < c.z1 ? CycleStrategy::seed_scan : CycleStrategy::corollary_sweep;
    return c;
}

} // namespace mintest
