#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mintest/benchmark.hpp"
#include "mintest/boolean_matrix.hpp"
#include "mintest/length_heuristic.hpp"
#include "mintest/mandatory.hpp"
#include "mintest/oracle.hpp"
#include "mintest/pruning.hpp"
#include "mintest/search.hpp"

namespace mintest {

/// Everything `analyze` prints about a matrix.
struct Analysis {
    BooleanMatrix sorted;
    std::map<std::size_t, std::size_t> popcounts;
    std::size_t candidate_pair_count = 0;
    MandatoryResult mandatory;
    Partition partition;
    ColumnPairStats stats;
    HeuristicEstimate global;
    LocalEstimate local;
    std::vector<ColumnRelation> bijective;
    std::vector<std::string> warnings;
    /// Display name per entry of partition.classes.
    std::vector<std::string> class_names;
    /// k=2, p>=3 seeds over the non-mandatory columns, when requested.
    std::optional<std::vector<SeedEntry>> seeds;
};

Analysis analyze(const BooleanMatrix& m, bool with_seeds);

/// Q1, Q2, ... numbering every non-empty key in ascending order, singletons included,
/// so a dropped singleton leaves a gap in the names of the listed classes.
std::vector<std::string> class_names(const BooleanMatrix& m, const Partition& partition);

std::string format_analysis(const Analysis& a);
std::string format_report(const TestReport& r);
std::string format_verdict(const ColumnSet& test, const TestVerdict& v);

/// One row per test: `length,columns` with the column list quoted, e.g. 7,"1,2,4,5,6,8,10".
std::string tests_csv(const std::vector<ColumnSet>& tests);

nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const TestReport& r);
nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const ColumnSet& test, const TestVerdict& v);
nlohmann::json to_json(const std::vector<ExperimentRecord>& records, bool deterministic);

} // namespace mintest
