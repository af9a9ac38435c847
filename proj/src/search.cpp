#include "mintest/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "mintest/combinations.hpp"
#include "mintest/errors.hpp"

namespace mintest {
namespace {

using SeedSet = std::unordered_set<BitVector, BitVectorHash>;

std::vector<std::size_t> positions_by_label(const BooleanMatrix& m) {
    std::vector<std::size_t> order(m.row_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.label(a) < m.label(b); });
    return order;
}

std::string length_note(std::size_t length) { return std::to_string(length); }

class LocalSearcher {
public:
    LocalSearcher(const BooleanMatrix& m, const Partition& partition, const ColumnSet& candidates,
                  const SearchConfig& config)
        : m_(m), config_(config), mandatory_count_(partition.mandatory.size()) {
        m.mask_of(candidates);
        for (const auto& cls : partition.classes) {
            std::vector<std::size_t> pos;
            for (auto l : cls.members) pos.push_back(m.position_of(l));
            classes_.push_back(std::move(pos));
        }
        // Largest class first: it rejects candidates fastest.
        std::stable_sort(classes_.begin(), classes_.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (const auto& c : classes_) has_seed_class_ = has_seed_class_ || c.size() >= 3;

        all_columns_ = candidates.columns();
        if (config.bijective) {
            std::map<std::size_t, std::size_t> parent;
            for (auto c : all_columns_) parent[c] = c;
            for (const auto& rel : bijective_column_pairs(m)) {
                if (!candidates.contains(rel.first) || !candidates.contains(rel.second)) continue;
                // Pairs come ordered by first column, so the smallest index becomes the root.
                parent[rel.second] = std::min(parent[rel.second], parent[rel.first]);
            }
            for (auto c : all_columns_) {
                std::size_t root = c;
                while (parent[root] != root) root = parent[root];
                members_[root].push_back(c);
            }
            for (const auto& [rep, _] : members_) search_columns_.push_back(rep);
        } else {
            search_columns_ = all_columns_;
            for (auto c : all_columns_) members_[c] = {c};
        }
    }

    std::size_t search_width() const { return search_columns_.size(); }
    bool has_classes() const { return !classes_.empty(); }

    LocalSearchResult run(std::size_t start, std::size_t lower_bound) {
        LocalSearchResult out;
        stats_.class_count = classes_.size();
        if (classes_.empty()) {
            stats_.levels_visited.push_back(0);
            out.local_length = 0;
            out.local_tests.push_back(ColumnSet{});
            out.stats = stats_;
            return out;
        }
        std::size_t level = start;
        if (level < lower_bound) {
            corrections_.push_back({integral(level), integral(lower_bound),
                                    "fewer columns cannot separate the largest class"});
            level = lower_bound;
        }
        if (level > search_width()) {
            corrections_.push_back({integral(level), integral(search_width()), "more than the available columns"});
            level = search_width();
        }
        std::vector<ColumnSet> found = config_.first_only ? run_first(level) : run_all(level);
        out.local_length = found.front().size();
        out.local_tests = expand(found);
        if (config_.first_only) out.local_tests.resize(1);
        out.stats = stats_;
        out.corrections = corrections_;
        return out;
    }

private:
    std::size_t integral(std::size_t local) const { return mandatory_count_ + local; }

    BitVector mask_of_indices(std::span<const std::size_t> idx) const {
        BitVector mask(m_.col_count());
        for (auto i : idx) mask.set(search_columns_[i] - 1);
        return mask;
    }

    ColumnSet columns_of(std::span<const std::size_t> idx) const {
        std::vector<std::size_t> cols;
        for (auto i : idx) cols.push_back(search_columns_[i]);
        return ColumnSet(std::move(cols));
    }

    bool separates(const BitVector& mask) const {
        for (const auto& cls : classes_)
            if (find_colliding_pair(m_, cls, mask)) return false;
        return true;
    }

    bool has_large_group(const BitVector& mask) const {
        for (const auto& cls : classes_) {
            if (cls.size() < 3) break;
            for (const auto& g : colliding_groups(m_, cls, mask))
                if (g.size() >= 3) return true;
        }
        return false;
    }

    SeedSet collect_seeds(std::size_t k) {
        SeedSet seeds;
        if (k == 0 || !has_seed_class_) return seeds;
        for_each_combination(search_width(), k, [&](std::span<const std::size_t> idx) {
            ++stats_.seed_scan_subsets;
            auto mask = mask_of_indices(idx);
            if (has_large_group(mask)) seeds.insert(std::move(mask));
            return true;
        });
        return seeds;
    }

    bool extends_seed(const BitVector& mask, std::span<const std::size_t> idx, const SeedSet& seeds) const {
        for (auto i : idx) {
            BitVector smaller = mask;
            smaller.reset(search_columns_[i] - 1);
            if (seeds.contains(smaller)) return true;
        }
        return false;
    }

    std::vector<ColumnSet> enumerate_level(std::size_t level, bool stop_at_first, const SeedSet& seeds) {
        stats_.levels_visited.push_back(level);
        stats_.subsets_total += binomial(all_columns_.size(), level);
        stats_.pruned_bijective += binomial(all_columns_.size(), level) - binomial(search_width(), level);
        std::vector<ColumnSet> tests;
        for_each_combination(search_width(), level, [&](std::span<const std::size_t> idx) {
            const auto mask = mask_of_indices(idx);
            if (!seeds.empty() && extends_seed(mask, idx, seeds)) {
                ++stats_.pruned_theorem2;
                return true;
            }
            ++stats_.subsets_checked;
            if (!separates(mask)) return true;
            tests.push_back(columns_of(idx));
            return !stop_at_first;
        });
        std::sort(tests.begin(), tests.end());
        return tests;
    }

    SeedSet seeds_for(std::size_t level) {
        return config_.theorem2 && level >= 2 ? collect_seeds(level - 1) : SeedSet{};
    }

    // First column of `local` that no within-class pair depends on alone.
    std::optional<std::size_t> redundant_column(const ColumnSet& local) const {
        const auto mask = m_.mask_of(local);
        BitVector needed(m_.col_count());
        for (const auto& cls : classes_)
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j) {
                    const auto diff = m_.difference(cls[i], cls[j]) & mask;
                    if (diff.count() != 1) continue;
                    needed |= diff;
                }
        for (auto c : local)
            if (!needed.test(c - 1)) return c;
        return std::nullopt;
    }

    ColumnSet reduce(ColumnSet local) const {
        const auto cols = local.columns();
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            auto smaller = local.without(*it);
            if (separates(m_.mask_of(smaller))) local = std::move(smaller);
        }
        return local;
    }

    std::vector<ColumnSet> run_all(std::size_t level) {
        while (true) {
            auto tests = enumerate_level(level, false, seeds_for(level));
            if (tests.empty()) {
                corrections_.push_back({integral(level), integral(level + 1), "no test of length " +
                                                                                  length_note(integral(level))});
                ++level;
                continue;
            }
            std::optional<ColumnSet> reducible;
            for (const auto& t : tests)
                if (redundant_column(t)) {
                    reducible = t;
                    break;
                }
            if (!reducible) return tests;
            const auto reduced = reduce(*reducible);
            corrections_.push_back({integral(level), integral(reduced.size()),
                                    "test " + reducible->to_string() + " (local part) is not dead-end"});
            level = reduced.size();
        }
    }

    std::vector<ColumnSet> run_first(std::size_t level) {
        std::vector<ColumnSet> found;
        while ((found = enumerate_level(level, true, seeds_for(level))).empty()) {
            corrections_.push_back({integral(level), integral(level + 1), "no test of length " +
                                                                              length_note(integral(level))});
            ++level;
        }
        ColumnSet current = reduce(found.front());
        if (current.size() != level)
            corrections_.push_back({integral(level), integral(current.size()), "first test found is not dead-end"});
        // Certify that one column fewer is impossible.
        while (current.size() > 0) {
            const std::size_t below = current.size() - 1;
            const auto cost = cycle_costs(static_cast<std::int64_t>(below > 0 ? below - 1 : 0), 3,
                                          static_cast<std::int64_t>(integral(search_width())),
                                          static_cast<std::int64_t>(mandatory_count_),
                                          static_cast<std::int64_t>(integral(current.size())));
            const bool seed_route = config_.theorem2 && below >= 2 && cost.chosen == CycleStrategy::seed_scan;
            stats_.strategies.push_back(seed_route ? CycleStrategy::seed_scan : CycleStrategy::corollary_sweep);
            auto shorter = enumerate_level(below, true, seed_route ? collect_seeds(below - 1) : SeedSet{});
            if (shorter.empty()) break;
            auto reduced = reduce(shorter.front());
            corrections_.push_back({integral(current.size()), integral(reduced.size()),
                                    "a test of length " + length_note(integral(below)) + " exists"});
            current = std::move(reduced);
        }
        return {current};
    }

    std::vector<ColumnSet> expand(const std::vector<ColumnSet>& tests) const {
        std::vector<ColumnSet> out;
        for (const auto& t : tests) {
            std::vector<std::vector<std::size_t>> partial{{}};
            for (auto rep : t) {
                std::vector<std::vector<std::size_t>> next;
                for (const auto& p : partial)
                    for (auto c : members_.at(rep)) {
                        auto q = p;
                        q.push_back(c);
                        next.push_back(std::move(q));
                    }
                partial = std::move(next);
            }
            for (auto& p : partial) out.emplace_back(std::move(p));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const BooleanMatrix& m_;
    const SearchConfig& config_;
    std::size_t mandatory_count_;
    std::vector<std::vector<std::size_t>> classes_;
    bool has_seed_class_ = false;
    std::vector<std::size_t> all_columns_;
    std::vector<std::size_t> search_columns_;
    std::map<std::size_t, std::vector<std::size_t>> members_;
    SearchStats stats_;
    std::vector<Correction> corrections_;
};

} // namespace

DeadendCheck is_deadend(const BooleanMatrix& m, const ColumnSet& test) {
    const auto mask = m.mask_of(test);
    if (!is_test(m, test)) throw InputError("dead-end check needs a test; {" + test.to_string() + "} is not one");
    DeadendCheck out;
    std::map<std::size_t, RowPair> first;
    const auto order = positions_by_label(m);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const auto diff = m.difference(order[i], order[j]) & mask;
            if (diff.count() != 1) continue;
            std::size_t col = 0;
            for (std::size_t w = 0; w < diff.words().size(); ++w)
                if (diff.words()[w]) col = w * 64 + static_cast<std::size_t>(std::countr_zero(diff.words()[w])) + 1;
            first.try_emplace(col, RowPair::of(m.label(order[i]), m.label(order[j])));
        }
    out.deadend = true;
    for (auto c : test) {
        DeadendWitness w{c, std::nullopt};
        if (auto it = first.find(c); it != first.end()) w.pair = it->second;
        if (!w.pair && !out.removable_column) out.removable_column = c;
        out.witnesses.push_back(w);
    }
    out.deadend = !out.removable_column.has_value();
    return out;
}

std::vector<RowPair> deadend_witness_pairs(const BooleanMatrix& m, const ColumnSet& test, std::size_t column) {
    const auto mask = m.mask_of(test);
    if (!test.contains(column)) throw InputError("column " + std::to_string(column) + " is not in the test");
    std::vector<RowPair> out;
    const auto order = positions_by_label(m);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const auto diff = m.difference(order[i], order[j]) & mask;
            if (diff.count() == 1 && diff.test(column - 1))
                out.push_back(RowPair::of(m.label(order[i]), m.label(order[j])));
        }
    return out;
}

ColumnSet deadend_reduce(const BooleanMatrix& m, const ColumnSet& test) {
    if (!is_test(m, test)) throw InputError("cannot reduce a non-test {" + test.to_string() + "}");
    ColumnSet current = test;
    const auto cols = test.columns();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        auto smaller = current.without(*it);
        if (is_test(m, smaller)) current = std::move(smaller);
    }
    return current;
}

std::size_t information_bound(const Partition& partition) {
    const std::size_t largest = partition.largest_class();
    if (largest < 2) return 0;
    return static_cast<std::size_t>(std::bit_width(largest - 1));
}

LocalSearchResult search_local_tests(const BooleanMatrix& m, const Partition& partition, const ColumnSet& candidates,
                                     const SearchConfig& config, std::size_t start_length) {
    LocalSearcher searcher(m, partition, candidates, config);
    if (searcher.has_classes()) {
        // Every class must be separable by the candidates, or no length works.
        BitVector mask = m.mask_of(candidates);
        for (const auto& cls : partition.classes) {
            std::vector<std::size_t> pos;
            for (auto l : cls.members) pos.push_back(m.position_of(l));
            if (find_colliding_pair(m, pos, mask))
                throw InputError("candidate columns cannot separate class " + cls.key);
        }
    }
    return searcher.run(start_length, information_bound(partition));
}

TestReport enumerate_minimal_tests(const BooleanMatrix& m, const SearchConfig& config) {
    TestReport report;
    if (m.row_count() < 2) {
        report.minimal_tests.push_back(ColumnSet{});
        report.deadend_verified.push_back(true);
        return report;
    }
    if (!config.use_heuristic && m.col_count() > config.search_ceiling)
        throw CeilingError("search without the length estimate is limited to " +
                           std::to_string(config.search_ceiling) + " columns, matrix has " +
                           std::to_string(m.col_count()));

    const BooleanMatrix sorted = sort_rows_by_binary_value(m);
    const auto mandatory = find_mandatory(sorted);
    const auto partition = partition_by_mandatory(sorted, mandatory.mandatory);
    report.mandatory = mandatory.mandatory;
    report.global_estimate = estimate_length(column_pair_stats(sorted));
    report.local_estimate = estimate_local_length(sorted, partition, config.local_union_classes);

    const std::size_t start = config.use_heuristic ? report.local_estimate.t0 : information_bound(partition);
    report.start_length = integral_length(mandatory.mandatory.size(), start);

    const ColumnSet candidates = ColumnSet::all(sorted.col_count()).without(mandatory.mandatory);
    auto local = search_local_tests(sorted, partition, candidates, config, start);

    report.minimal_length = integral_length(mandatory.mandatory.size(), local.local_length);
    for (const auto& t : local.local_tests) report.minimal_tests.push_back(t.united(mandatory.mandatory));
    std::sort(report.minimal_tests.begin(), report.minimal_tests.end());
    for (const auto& t : report.minimal_tests) report.deadend_verified.push_back(is_deadend(sorted, t).deadend);
    report.complete = !config.first_only;
    report.stats = std::move(local.stats);
    report.corrections = std::move(local.corrections);
    return report;
}

TestVerdict verify_test(const BooleanMatrix& m, const ColumnSet& test, std::size_t oracle_ceiling) {
    m.mask_of(test);
    TestVerdict v;
    v.is_test = is_test(m, test);
    if (v.is_test) v.is_deadend = is_deadend(m, test).deadend;
    if (m.col_count() <= oracle_ceiling) {
        const auto oracle = oracle_minimal_tests(m, oracle_ceiling);
        v.min_length = oracle.min_length;
        v.minimal = v.is_test && test.size() == oracle.min_length ? Minimality::yes : Minimality::no;
        v.note = "minimal length " + std::to_string(oracle.min_length) + " by exhaustive enumeration";
        return v;
    }
    if (!v.is_test) {
        v.minimal = Minimality::no;
        v.note = "not a test";
        return v;
    }
    if (v.is_deadend == false) {
        v.minimal = Minimality::no;
        v.note = "not dead-end, so a shorter test exists";
        return v;
    }
    const auto sorted = sort_rows_by_binary_value(m);
    const auto mandatory = find_mandatory(sorted);
    const auto partition = partition_by_mandatory(sorted, mandatory.mandatory);
    const auto local = estimate_local_length(sorted, partition);
    v.estimated_length = integral_length(mandatory.mandatory.size(), local.t0);
    v.note = "unknown: |T| = " + std::to_string(test.size()) + " vs estimated length " +
             std::to_string(*v.estimated_length);
    return v;
}

} // namespace mintest
