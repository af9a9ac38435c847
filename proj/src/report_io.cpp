#include "mintest/report_io.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace mintest {
namespace {

std::string pair_text(const RowPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string labels_text(const std::vector<std::size_t>& labels, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? sep : "") + std::to_string(labels[i]);
    return out;
}

std::string sci(double x) {
    std::ostringstream s;
    s << std::setprecision(8) << x;
    return s.str();
}

const char* strategy_name(CycleStrategy s) {
    return s == CycleStrategy::seed_scan ? "seed_scan" : "corollary_sweep";
}

void print_estimate(std::ostringstream& out, const HeuristicEstimate& e, std::size_t total_pairs) {
    out << "  pairs " << total_pairs << ", threshold 1/" << total_pairs << " = " << sci(e.threshold) << '\n';
    out << "  ratios ascending:";
    for (const auto& r : e.ratio_list) out << " x" << r.column << '=' << sci(r.ratio);
    out << '\n';
    for (std::size_t t = 0; t < e.beta_sequence.size(); ++t)
        out << "  beta_" << t + 1 << " = " << sci(e.beta_sequence[t]) << '\n';
    out << "  bracket: beta_" << e.t0 << " = " << sci(e.beta_t) << " > " << sci(e.threshold)
        << " >= " << sci(e.beta_next) << '\n';
    out << "  t0 = " << e.t0 << (e.degenerate ? " (degenerate: bracket never closed)" : "") << '\n';
}

nlohmann::json estimate_json(const HeuristicEstimate& e) {
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& r : e.ratio_list) ratios.push_back({{"column", r.column}, {"ratio", r.ratio}});
    return {{"t0", e.t0},          {"beta_t", e.beta_t},         {"beta_next", e.beta_next},
            {"threshold", e.threshold}, {"ratios", ratios},     {"beta_sequence", e.beta_sequence},
            {"degenerate", e.degenerate}};
}

nlohmann::json tests_json(const std::vector<ColumnSet>& tests) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : tests) out.push_back(t.columns());
    return out;
}

} // namespace

Analysis analyze(const BooleanMatrix& m, bool with_seeds) {
    auto sorted = sort_rows_by_binary_value(m);
    auto mandatory = find_mandatory(sorted);
    auto partition = partition_by_mandatory(sorted, mandatory.mandatory);
    auto stats = column_pair_stats(sorted);
    auto global = estimate_length(stats);
    auto local = estimate_local_length(sorted, partition);
    std::optional<std::vector<SeedEntry>> seeds;
    if (with_seeds) {
        const auto candidates = ColumnSet::all(sorted.col_count()).without(mandatory.mandatory);
        seeds = candidates.size() >= 2 ? theorem2_seeds(sorted, partition, candidates, 2) : std::vector<SeedEntry>{};
    }
    auto names = class_names(sorted, partition);
    return Analysis{sorted,
                    row_popcounts(m),
                    candidate_pairs(sorted).size(),
                    std::move(mandatory),
                    std::move(partition),
                    std::move(stats),
                    std::move(global),
                    std::move(local),
                    bijective_column_pairs(m),
                    validation_warnings(m),
                    std::move(names),
                    std::move(seeds)};
}

std::vector<std::string> class_names(const BooleanMatrix& m, const Partition& partition) {
    std::set<std::string> keys;
    for (const auto& cls : partition.classes) keys.insert(cls.key);
    for (auto label : partition.dropped_singletons) {
        const auto pos = m.position_of(label);
        std::string key;
        for (auto c : partition.mandatory) key += m.bit(pos, c) ? '1' : '0';
        keys.insert(key);
    }
    // keys are equal-length bit strings, so string order is numeric order
    std::vector<std::string> names;
    for (const auto& cls : partition.classes)
        names.push_back("Q" + std::to_string(std::distance(keys.begin(), keys.find(cls.key)) + 1));
    return names;
}

std::string format_analysis(const Analysis& a) {
    std::ostringstream out;
    const auto& m = a.sorted;
    for (const auto& w : a.warnings) out << "warning: " << w << '\n';
    out << "matrix " << m.row_count() << " x " << m.col_count() << "\n\n";

    out << "sorted rows (label  row  ones):\n";
    for (std::size_t i = 0; i < m.row_count(); ++i)
        out << "  S" << std::left << std::setw(4) << m.label(i) << std::right << m.row_string(i) << "  "
            << m.row_popcount(i) << '\n';

    const std::size_t total = PairIndex{m.row_count()}.total_pairs();
    out << "\ncandidate pairs (ones differ by 1): " << a.candidate_pair_count << " of " << total;
    if (total) out << " (" << std::fixed << std::setprecision(2) << 100.0 * a.candidate_pair_count / total << "%)";
    out << std::defaultfloat << '\n';

    out << "mandatory columns: {" << a.mandatory.mandatory.to_string() << "}\n";
    for (const auto& [col, pairs] : a.mandatory.witnesses) {
        out << "  x" << col << ':';
        for (const auto& p : pairs) out << ' ' << pair_text(p);
        out << '\n';
    }

    out << "\nclasses on {" << a.partition.mandatory.to_string() << "}:\n";
    for (std::size_t i = 0; i < a.partition.classes.size(); ++i) {
        const auto& cls = a.partition.classes[i];
        out << "  " << a.class_names[i] << " [" << cls.key << "]: " << labels_text(cls.members) << "  ("
            << cls.pair_count() << " pairs)\n";
    }
    if (!a.partition.dropped_singletons.empty())
        out << "  singletons dropped: " << labels_text(a.partition.dropped_singletons) << '\n';
    out << "  within-class pairs: " << a.partition.within_class_pairs() << " of " << total << '\n';

    out << "\ncolumn stats (ones zeros separated unseparated):\n";
    for (const auto& c : a.stats.columns)
        out << "  x" << std::left << std::setw(3) << c.column << std::right << std::setw(4) << c.ones << std::setw(6)
            << c.zeros << std::setw(6) << c.distinguished_pairs << std::setw(6) << c.undistinguished_pairs << '\n';

    if (!a.bijective.empty()) {
        out << "equal/complementary columns:";
        for (const auto& r : a.bijective) out << " x" << r.first << (r.complement ? "~" : "=") << 'x' << r.second;
        out << '\n';
    }

    out << "\nglobal estimate:\n";
    print_estimate(out, a.global, a.stats.total_pairs);
    out << "  integral estimate: " << a.global.t0 << '\n';

    out << "\nlocal estimate on classes";
    for (auto i : a.local.class_indices) out << ' ' << a.class_names[i];
    out << ":\n";
    if (a.local.estimate) {
        print_estimate(out, *a.local.estimate, a.local.stats.total_pairs);
    } else {
        out << "  nothing to separate\n";
    }
    out << "  integral estimate: " << a.mandatory.mandatory.size() << " + " << a.local.t0 << " = "
        << integral_length(a.mandatory.mandatory.size(), a.local.t0) << '\n';

    if (a.seeds) {
        out << "\nseeds (k=2, p>=3), columns -> class: rows\n";
        for (const auto& s : *a.seeds)
            out << "  (" << s.columns.to_string() << ") -> " << a.class_names[s.class_index] << ": ("
                << labels_text(s.rows) << ")\n";
        if (a.seeds->empty()) out << "  none\n";
    }
    return out.str();
}

std::string format_report(const TestReport& r) {
    std::ostringstream out;
    out << "mandatory columns: {" << r.mandatory.to_string() << "}\n";
    out << "start length: " << r.start_length << '\n';
    for (const auto& c : r.corrections)
        out << "correction: " << c.old_length << " -> " << c.new_length << " (" << c.reason << ")\n";
    out << (r.complete ? "minimal length: " : "minimal length (one test certified): ") << r.minimal_length << '\n';
    out << (r.complete ? "minimal tests: " : "minimal test: ") << r.minimal_tests.size() << '\n';
    for (std::size_t i = 0; i < r.minimal_tests.size(); ++i)
        out << "  {" << r.minimal_tests[i].to_string() << "}"
            << (r.deadend_verified[i] ? "" : "  NOT DEAD-END") << '\n';
    out << "subsets checked: " << r.stats.subsets_checked << ", candidate subsets at visited lengths: "
        << r.stats.subsets_total << '\n';
    out << "pruned: theorem2 " << r.stats.pruned_theorem2 << ", bijective " << r.stats.pruned_bijective
        << ", seed scan " << r.stats.seed_scan_subsets << '\n';
    return out.str();
}

std::string format_verdict(const ColumnSet& test, const TestVerdict& v) {
    std::ostringstream out;
    out << "columns: {" << test.to_string() << "}\n";
    out << "test: " << (v.is_test ? "yes" : "no") << '\n';
    if (v.is_deadend) out << "dead-end: " << (*v.is_deadend ? "yes" : "no") << '\n';
    out << "minimal: "
        << (v.minimal == Minimality::yes ? "yes" : v.minimal == Minimality::no ? "no" : "unknown") << '\n';
    if (!v.note.empty()) out << "note: " << v.note << '\n';
    return out.str();
}

std::string tests_csv(const std::vector<ColumnSet>& tests) {
    std::string out = "length,columns\n";
    for (const auto& t : tests) out += std::to_string(t.size()) + ",\"" + t.to_string() + "\"\n";
    return out;
}

nlohmann::json to_json(const Analysis& a) {
    nlohmann::json j;
    j["rows"] = a.sorted.row_count();
    j["cols"] = a.sorted.col_count();
    j["sorted_labels"] = a.sorted.labels();
    nlohmann::json pops = nlohmann::json::object();
    for (const auto& [label, count] : a.popcounts) pops[std::to_string(label)] = count;
    j["popcounts"] = pops;
    j["candidate_pairs"] = a.candidate_pair_count;
    j["mandatory"] = a.mandatory.mandatory.columns();
    nlohmann::json wit = nlohmann::json::object();
    for (const auto& [col, pairs] : a.mandatory.witnesses) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& p : pairs) list.push_back({p.first, p.second});
        wit[std::to_string(col)] = list;
    }
    j["witnesses"] = wit;
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t i = 0; i < a.partition.classes.size(); ++i) {
        const auto& cls = a.partition.classes[i];
        classes.push_back({{"name", a.class_names[i]}, {"key", cls.key}, {"members", cls.members}});
    }
    j["classes"] = classes;
    j["dropped_singletons"] = a.partition.dropped_singletons;
    j["within_class_pairs"] = a.partition.within_class_pairs();
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : a.stats.columns)
        cols.push_back({{"column", c.column}, {"ones", c.ones}, {"separated", c.distinguished_pairs},
                        {"unseparated", c.undistinguished_pairs}});
    j["columns"] = cols;
    nlohmann::json bij = nlohmann::json::array();
    for (const auto& r : a.bijective) bij.push_back({{"first", r.first}, {"second", r.second}, {"complement", r.complement}});
    j["bijective"] = bij;
    j["global_estimate"] = estimate_json(a.global);
    j["local_estimate"] = {{"classes", a.local.class_indices},
                           {"t0", a.local.t0},
                           {"integral", integral_length(a.mandatory.mandatory.size(), a.local.t0)}};
    if (a.local.estimate) j["local_estimate"]["trail"] = estimate_json(*a.local.estimate);
    j["warnings"] = a.warnings;
    if (a.seeds) {
        nlohmann::json seeds = nlohmann::json::array();
        for (const auto& s : *a.seeds)
            seeds.push_back({{"columns", s.columns.columns()},
                             {"class", a.class_names[s.class_index]},
                             {"rows", s.rows}});
        j["seeds"] = seeds;
    }
    return j;
}

nlohmann::json to_json(const TestReport& r) {
    nlohmann::json corrections = nlohmann::json::array();
    for (const auto& c : r.corrections) corrections.push_back({{"from", c.old_length}, {"to", c.new_length}, {"reason", c.reason}});
    nlohmann::json strategies = nlohmann::json::array();
    for (auto s : r.stats.strategies) strategies.push_back(strategy_name(s));
    nlohmann::json deadend = nlohmann::json::array();
    for (bool b : r.deadend_verified) deadend.push_back(b);
    return {{"minimal_length", r.minimal_length},
            {"mandatory", r.mandatory.columns()},
            {"minimal_tests", tests_json(r.minimal_tests)},
            {"deadend_verified", deadend},
            {"complete", r.complete},
            {"start_length", r.start_length},
            {"corrections", corrections},
            {"stats",
             {{"subsets_checked", r.stats.subsets_checked},
              {"subsets_total", r.stats.subsets_total},
              {"pruned_theorem2", r.stats.pruned_theorem2},
              {"pruned_bijective", r.stats.pruned_bijective},
              {"seed_scan_subsets", r.stats.seed_scan_subsets},
              {"levels_visited", r.stats.levels_visited},
              {"strategies", strategies}}}};
}

nlohmann::json to_json(const OracleResult& r) {
    nlohmann::json j{{"min_length", r.min_length},
                     {"minimal_tests", tests_json(r.minimal_tests)},
                     {"subsets_checked", r.subsets_checked}};
    if (r.deadend_tests) j["deadend_tests"] = tests_json(*r.deadend_tests);
    return j;
}

nlohmann::json to_json(const ColumnSet& test, const TestVerdict& v) {
    nlohmann::json j{{"columns", test.columns()},
                     {"is_test", v.is_test},
                     {"minimal", v.minimal == Minimality::yes ? "yes" : v.minimal == Minimality::no ? "no" : "unknown"},
                     {"note", v.note}};
    if (v.is_deadend) j["is_deadend"] = *v.is_deadend;
    if (v.min_length) j["min_length"] = *v.min_length;
    if (v.estimated_length) j["estimated_length"] = *v.estimated_length;
    return j;
}

nlohmann::json to_json(const std::vector<ExperimentRecord>& records, bool deterministic) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j{{"seed", r.seed},
                         {"m", r.m},
                         {"n", r.n},
                         {"density", r.density},
                         {"mandatory_count", r.mandatory_count},
                         {"heuristic_t0", r.heuristic_t0},
                         {"exact_t0", r.exact_t0},
                         {"n_minimal_tests", r.minimal_test_count},
                         {"subsets_pruned", static_cast<long long>(r.subsets_checked_without) -
                                                static_cast<long long>(r.subsets_checked_with_pruning)},
                         {"subsets_total", r.subsets_checked_without},
                         {"ms_analyze", deterministic ? 0.0 : r.ms_analyze},
                         {"ms_search", deterministic ? 0.0 : r.ms_search},
                         {"ms_oracle", deterministic ? 0.0 : r.ms_oracle},
                         {"match", r.match}};
        if (!r.error.empty()) j["error"] = r.error;
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace mintest
