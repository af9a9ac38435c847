#include "mintest/mandatory.hpp"

#include <algorithm>

namespace mintest {
namespace {

std::size_t single_differing_column(const BooleanMatrix& m, std::size_t a, std::size_t b) {
    const auto diff = m.difference(a, b);
    for (std::size_t c = 0; c < m.col_count(); ++c)
        if (diff.test(c)) return c + 1;
    return 0;
}

void add_witness(MandatoryResult& result, std::size_t column, RowPair pair) {
    result.witnesses[column].push_back(pair);
}

ColumnSet keys_of(const MandatoryResult& r) {
    std::vector<std::size_t> cols;
    for (const auto& [c, _] : r.witnesses) cols.push_back(c);
    return ColumnSet(std::move(cols));
}

void finish(MandatoryResult& r) {
    for (auto& [_, pairs] : r.witnesses) {
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    r.mandatory = keys_of(r);
}

} // namespace

std::size_t Partition::within_class_pairs() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.pair_count();
    return total;
}

std::size_t Partition::largest_class() const {
    std::size_t best = 0;
    for (const auto& c : classes) best = std::max(best, c.members.size());
    return best;
}

std::vector<RowPair> candidate_pairs(const BooleanMatrix& m) {
    std::vector<std::vector<std::size_t>> buckets(m.col_count() + 1);
    for (std::size_t r = 0; r < m.row_count(); ++r) buckets[m.row_popcount(r)].push_back(r);
    std::vector<RowPair> pairs;
    for (std::size_t w = 0; w + 1 < buckets.size(); ++w)
        for (auto a : buckets[w])
            for (auto b : buckets[w + 1]) pairs.push_back(RowPair::of(m.label(a), m.label(b)));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

MandatoryResult find_mandatory(const BooleanMatrix& m) {
    MandatoryResult result;
    for (const auto& pair : candidate_pairs(m)) {
        ++result.pairs_examined;
        const auto a = m.position_of(pair.first);
        const auto b = m.position_of(pair.second);
        if (m.hamming_distance(a, b) == 1) add_witness(result, single_differing_column(m, a, b), pair);
    }
    finish(result);
    return result;
}

Partition partition_by_mandatory(const BooleanMatrix& m, const ColumnSet& mandatory) {
    m.mask_of(mandatory);  // range check
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::string key;
        key.reserve(mandatory.size());
        for (auto c : mandatory) key += m.bit(r, c) ? '1' : '0';
        groups[key].push_back(m.label(r));
    }
    // Equal-length '0'/'1' keys: string order is binary-number order.
    Partition p;
    p.mandatory = mandatory;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end());
        if (members.size() == 1)
            p.dropped_singletons.push_back(members.front());
        else
            p.classes.push_back(RowClass{key, std::move(members)});
    }
    std::sort(p.dropped_singletons.begin(), p.dropped_singletons.end());
    return p;
}

RefinementResult refine_mandatory(const BooleanMatrix& m, std::size_t first_pass_quota) {
    RefinementResult out;
    MandatoryResult& found = out.mandatory;

    const BooleanMatrix sorted = sort_rows_by_binary_value(m);
    std::size_t witness_pairs = 0;
    for (std::size_t j = 0; j < sorted.row_count() && witness_pairs < first_pass_quota; ++j) {
        const auto pj = sorted.row_popcount(j);
        for (std::size_t i = 0; i < j; ++i) {
            const auto pi = sorted.row_popcount(i);
            if (pi + 1 != pj && pj + 1 != pi) continue;
            ++out.first_pass_pairs;
            if (sorted.hamming_distance(i, j) == 1) {
                add_witness(found, single_differing_column(sorted, i, j),
                            RowPair::of(sorted.label(i), sorted.label(j)));
                ++witness_pairs;
            }
        }
    }
    finish(found);

    while (true) {
        ++out.iterations;
        out.partition = partition_by_mandatory(m, found.mandatory);
        bool grew = false;
        for (const auto& cls : out.partition.classes) {
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                const auto a = m.position_of(cls.members[i]);
                for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
                    const auto b = m.position_of(cls.members[j]);
                    const auto pa = m.row_popcount(a);
                    const auto pb = m.row_popcount(b);
                    if (pa + 1 != pb && pb + 1 != pa) continue;
                    ++out.in_class_pairs;
                    if (m.hamming_distance(a, b) == 1) {
                        const auto col = single_differing_column(m, a, b);
                        if (!found.mandatory.contains(col)) grew = true;
                        add_witness(found, col, RowPair::of(cls.members[i], cls.members[j]));
                    }
                }
            }
        }
        finish(found);
        if (!grew) break;
    }
    found.pairs_examined = out.first_pass_pairs + out.in_class_pairs;
    return out;
}

} // namespace mintest
