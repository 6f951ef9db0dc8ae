#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fuss/engine.hpp"
#include "fuss/scheme.hpp"

namespace fuss {

/// Mean with 95% confidence interval: SE = s / sqrt(n) with the n-1 sample
/// standard deviation, CI = mean +- 1.96 SE. Spread fields are NaN for n = 1.
struct SummaryStat {
    double mean = 0.0;
    double sample_stddev = std::numeric_limits<double>::quiet_NaN();
    double standard_error = std::numeric_limits<double>::quiet_NaN();
    double ci95_low = std::numeric_limits<double>::quiet_NaN();
    double ci95_high = std::numeric_limits<double>::quiet_NaN();
    std::size_t n = 0;

    bool has_spread() const { return n >= 2; }
};

SummaryStat summarize(std::span<const double> values);

/// Least-squares slope of log(y) against log(x). All inputs must be positive
/// and at least 3 points with distinct x are required.
double scaling_fit(std::span<const std::pair<double, double>> points);

/// A replicated experiment: every scheme runs against identical problem
/// instances with replication-matched seeds (replication r uses base + r),
/// so only the selection scheme differs between runs.
struct ExperimentSpec {
    std::vector<SelectionScheme> schemes;
    GaParams params;  // rng_seed is the base seed
    std::uint32_t replications = 1;
    StopRule stop;
    TraceOptions trace;

    void validate() const {
        if (schemes.empty()) throw std::invalid_argument("no selection schemes");
        if (replications == 0) throw std::invalid_argument("replications must be positive");
        params.validate();
    }
};

struct ExperimentTable {
    std::vector<SelectionScheme> schemes;
    std::uint32_t replications = 0;
    bool minimizing = false;
    std::vector<std::vector<RunRecord>> records;  // [scheme][replication]
};

/// Runs all (scheme, replication) pairs. `problem_for_replication(r)` must be
/// deterministic in r so every scheme sees the same instance; calling it from
/// worker threads is safe because each call builds an independent value.
/// Replications execute in parallel; the result table layout is fixed, so
/// output is deterministic regardless of scheduling.
template <typename Factory>
ExperimentTable run_experiment(Factory&& problem_for_replication, const ExperimentSpec& spec) {
    spec.validate();

    ExperimentTable table;
    table.schemes = spec.schemes;
    table.replications = spec.replications;
    table.minimizing = problem_for_replication(0).minimizing();
    table.records.assign(spec.schemes.size(), std::vector<RunRecord>(spec.replications));

    struct Job {
        std::size_t scheme;
        std::uint32_t rep;
    };
    std::vector<Job> jobs;
    jobs.reserve(spec.schemes.size() * spec.replications);
    for (std::size_t s = 0; s < spec.schemes.size(); ++s)
        for (std::uint32_t r = 0; r < spec.replications; ++r) jobs.push_back({s, r});

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string error_message;

    auto worker = [&]() {
        while (true) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            const Job job = jobs[j];
            try {
                const auto problem = problem_for_replication(job.rep);
                GaParams params = spec.params;
                params.rng_seed = spec.params.rng_seed + job.rep;
                table.records[job.scheme][job.rep] =
                    run(problem, spec.schemes[job.scheme], params, spec.stop, spec.trace);
            } catch (const std::exception& e) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (error_message.empty())
                    error_message = "run failed for scheme " +
                                    scheme_name(spec.schemes[job.scheme]) + " replication " +
                                    std::to_string(job.rep) + ": " + e.what();
            }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), jobs.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!error_message.empty()) throw std::runtime_error(error_message);
    return table;
}

struct SchemeSummary {
    std::string scheme;
    SummaryStat stat;
    std::size_t failures = 0;  // runs that never reached the target
};

/// Generations-to-target per scheme. Runs that never reached the target are
/// excluded from the statistic and reported in `failures`.
std::vector<SchemeSummary> summarize_generations_to_target(const ExperimentTable& table);

/// Final best-ever fitness per scheme, in display orientation.
std::vector<SchemeSummary> summarize_final_best(const ExperimentTable& table);

/// Per-run trace CSV: iteration, generation, best_ever_fitness and, when the
/// record carries them, the two diversity columns. Fitness is un-negated for
/// minimizing problems.
void write_trace_csv(std::ostream& out, const RunRecord& record, bool minimizing);

/// Per-experiment summary CSV:
/// scheme, mean, stddev, stderr, ci_low, ci_high, n, failures.
void write_summary_csv(std::ostream& out, std::span<const SchemeSummary> summaries);

/// Writes trace_<scheme>_r<rep>.csv for every run plus summary.csv into
/// `dir`. The summary is generations-to-target when the spec has a target,
/// final best-ever otherwise. Returns the summaries written.
std::vector<SchemeSummary> write_experiment_csvs(const std::filesystem::path& dir,
                                                 const ExperimentTable& table,
                                                 const ExperimentSpec& spec);

}  // namespace fuss
