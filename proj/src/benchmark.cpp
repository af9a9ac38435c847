#include "mintest/benchmark.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mintest/generator.hpp"
#include "mintest/length_heuristic.hpp"
#include "mintest/mandatory.hpp"
#include "mintest/search.hpp"

namespace mintest {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

ExperimentRecord run_record(const BooleanMatrix& m, std::uint64_t seed, double density, std::size_t oracle_ceiling) {
    ExperimentRecord rec;
    rec.seed = seed;
    rec.m = m.row_count();
    rec.n = m.col_count();
    rec.density = density;
    try {
        auto t = Clock::now();
        const auto sorted = sort_rows_by_binary_value(m);
        const auto mandatory = find_mandatory(sorted);
        const auto partition = partition_by_mandatory(sorted, mandatory.mandatory);
        const auto local = estimate_local_length(sorted, partition);
        rec.ms_analyze = ms_since(t);
        rec.mandatory_count = mandatory.mandatory.size();
        rec.heuristic_t0 = integral_length(rec.mandatory_count, local.t0);

        t = Clock::now();
        const auto pruned = enumerate_minimal_tests(m, SearchConfig{});
        rec.ms_search = ms_since(t);
        rec.subsets_checked_with_pruning = pruned.stats.subsets_checked;

        SearchConfig plain;
        plain.theorem2 = false;
        plain.bijective = false;
        const auto unpruned = enumerate_minimal_tests(m, plain);
        rec.subsets_checked_without = unpruned.stats.subsets_checked;

        t = Clock::now();
        const auto oracle = oracle_minimal_tests(m, oracle_ceiling);
        rec.ms_oracle = ms_since(t);
        rec.exact_t0 = oracle.min_length;
        rec.minimal_test_count = oracle.minimal_tests.size();
        rec.match = pruned.minimal_tests == oracle.minimal_tests && unpruned.minimal_tests == oracle.minimal_tests;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<ExperimentRecord> run_benchmark(const StreamConfig& config) {
    struct Job {
        std::uint64_t seed;
        std::size_t m, n;
        double density;
    };
    SplitMix64 master(config.seed);
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < config.count; ++i) {
        Job job{master.next(), 0, 0, config.densities.empty() ? 0.5 : config.densities[i % config.densities.size()]};
        SplitMix64 shape(job.seed);
        job.n = static_cast<std::size_t>(shape.next_in(config.cols_min, config.cols_max));
        job.m = static_cast<std::size_t>(shape.next_in(config.rows_min, config.rows_max));
        if (job.n < 63) job.m = std::min(job.m, std::size_t{1} << job.n);
        jobs.push_back(job);
    }

    std::vector<ExperimentRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto& job = jobs[i];
            try {
                const auto m = generate_matrix({job.m, job.n, job.density, job.seed});
                records[i] = run_record(m, job.seed, job.density, config.oracle_ceiling);
            } catch (const std::exception& e) {
                records[i].seed = job.seed;
                records[i].m = job.m;
                records[i].n = job.n;
                records[i].density = job.density;
                records[i].error = e.what();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, jobs.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return records;
}

std::string benchmark_csv(const std::vector<ExperimentRecord>& records, bool deterministic) {
    std::ostringstream out;
    if (!deterministic) {
        const std::time_t now = std::time(nullptr);
        std::tm utc{};
        gmtime_r(&now, &utc);
        out << "# generated " << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ") << '\n';
    }
    out << "seed,m,n,density,mandatory_count,heuristic_t0,exact_t0,n_minimal_tests,subsets_pruned,subsets_total,"
           "ms_analyze,ms_search,ms_oracle\n";
    for (const auto& r : records) {
        const auto pruned = static_cast<long long>(r.subsets_checked_without) -
                            static_cast<long long>(r.subsets_checked_with_pruning);
        out << r.seed << ',' << r.m << ',' << r.n << ',' << std::fixed << std::setprecision(2) << r.density << ','
            << r.mandatory_count << ',' << r.heuristic_t0 << ',' << r.exact_t0 << ',' << r.minimal_test_count << ','
            << pruned << ',' << r.subsets_checked_without << ',' << std::setprecision(3)
            << (deterministic ? 0.0 : r.ms_analyze) << ',' << (deterministic ? 0.0 : r.ms_search) << ','
            << (deterministic ? 0.0 : r.ms_oracle) << '\n';
    }
    return out.str();
}

BenchmarkSummary summarize(const std::vector<ExperimentRecord>& records) {
    BenchmarkSummary s;
    s.records = records.size();
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    for (const auto& r : records) {
        if (!r.error.empty()) {
            ++s.failures;
            continue;
        }
        if (!r.match) ++s.mismatches;
        ++s.heuristic_error[static_cast<long long>(r.heuristic_t0) - static_cast<long long>(r.exact_t0)];
        if (r.subsets_checked_with_pruning > r.subsets_checked_without) ++s.pruning_violations;
        if (r.subsets_checked_without > 0) {
            ratio_sum += static_cast<double>(r.subsets_checked_with_pruning) /
                         static_cast<double>(r.subsets_checked_without);
            ++ratio_count;
        }
    }
    s.mean_pruning_ratio = ratio_count ? ratio_sum / static_cast<double>(ratio_count) : 1.0;
    return s;
}

std::string format_summary(const BenchmarkSummary& s) {
    std::ostringstream out;
    out << "records: " << s.records << "  failures: " << s.failures << "  mismatches: " << s.mismatches << '\n';
    out << "heuristic error (estimate - exact):\n";
    for (const auto& [err, count] : s.heuristic_error)
        out << "  " << std::showpos << err << std::noshowpos << ": " << count << '\n';
    out << "pruning: mean checked ratio " << std::fixed << std::setprecision(3) << s.mean_pruning_ratio
        << ", records where pruning checked more: " << s.pruning_violations << '\n';
    return out.str();
}

} // namespace mintest
