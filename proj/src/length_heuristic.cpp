#include "mintest/length_heuristic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mintest/errors.hpp"

namespace mintest {

ColumnPairStats column_pair_stats(const BooleanMatrix& m) {
    std::vector<std::size_t> labels = m.labels();
    return column_pair_stats(m, labels, ColumnSet::all(m.col_count()));
}

ColumnPairStats column_pair_stats(const BooleanMatrix& m, std::span<const std::size_t> labels,
                                  const ColumnSet& columns) {
    m.mask_of(columns);
    ColumnPairStats s;
    s.row_count = labels.size();
    s.total_pairs = PairIndex{labels.size()}.total_pairs();
    std::vector<std::size_t> positions;
    positions.reserve(labels.size());
    for (auto l : labels) positions.push_back(m.position_of(l));
    for (auto c : columns) {
        ColumnStat cs;
        cs.column = c;
        for (auto p : positions) cs.ones += m.bit(p, c) ? 1 : 0;
        cs.zeros = s.row_count - cs.ones;
        cs.distinguished_pairs = cs.ones * cs.zeros;
        cs.undistinguished_pairs = s.total_pairs - cs.distinguished_pairs;
        s.columns.push_back(cs);
    }
    return s;
}

HeuristicEstimate estimate_length(const ColumnPairStats& stats) {
    const bool any_useful = std::any_of(stats.columns.begin(), stats.columns.end(), [&](const ColumnStat& c) {
        return c.undistinguished_pairs < stats.total_pairs;
    });
    if (stats.total_pairs == 0 || !any_useful)
        throw std::invalid_argument("length estimate needs a column that separates some pair");

    HeuristicEstimate e;
    const double total = static_cast<double>(stats.total_pairs);
    e.threshold = 1.0 / total;
    for (const auto& c : stats.columns)
        e.ratio_list.push_back({c.column, static_cast<double>(c.undistinguished_pairs) / total});
    std::stable_sort(e.ratio_list.begin(), e.ratio_list.end(),
                     [](const RatioEntry& a, const RatioEntry& b) { return a.ratio < b.ratio; });
    const double r_min = e.ratio_list.front().ratio;

    double beta = 1.0;
    for (std::size_t t = 1; t <= e.ratio_list.size(); ++t) {
        beta *= e.ratio_list[t - 1].ratio;
        e.beta_sequence.push_back(beta);
        if (beta * r_min <= e.threshold) {
            e.t0 = t;
            e.beta_t = beta;
            e.beta_next = beta * r_min;
            e.degenerate = !(beta > e.threshold);
            return e;
        }
    }
    e.t0 = e.ratio_list.size();
    e.beta_t = beta;
    e.beta_next = beta * r_min;
    e.degenerate = true;
    return e;
}

std::vector<std::size_t> default_union_classes(const Partition& partition) {
    std::vector<std::size_t> idx(partition.classes.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return partition.classes[a].members.size() > partition.classes[b].members.size();
    });
    if (idx.size() > 2) idx.resize(2);
    std::sort(idx.begin(), idx.end());
    return idx;
}

LocalEstimate estimate_local_length(const BooleanMatrix& m, const Partition& partition,
                                    std::span<const std::size_t> class_indices) {
    LocalEstimate out;
    if (partition.classes.empty()) return out;
    if (class_indices.empty())
        out.class_indices = default_union_classes(partition);
    else
        out.class_indices.assign(class_indices.begin(), class_indices.end());
    std::sort(out.class_indices.begin(), out.class_indices.end());
    out.class_indices.erase(std::unique(out.class_indices.begin(), out.class_indices.end()), out.class_indices.end());
    for (auto i : out.class_indices) {
        if (i >= partition.classes.size()) throw InputError("class index " + std::to_string(i) + " out of range");
        const auto& members = partition.classes[i].members;
        out.union_labels.insert(out.union_labels.end(), members.begin(), members.end());
    }
    std::sort(out.union_labels.begin(), out.union_labels.end());
    const ColumnSet local = ColumnSet::all(m.col_count()).without(partition.mandatory);
    out.stats = column_pair_stats(m, out.union_labels, local);
    out.estimate = estimate_length(out.stats);
    out.t0 = out.estimate->t0;
    return out;
}

} // namespace mintest
