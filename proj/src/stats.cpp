#include "fuss/stats.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "text_io.hpp"

namespace fuss {

SummaryStat summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: no values");
    SummaryStat stat;
    stat.n = values.size();

    // Welford; the tests cross-check against a naive two-pass computation.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for (const double v : values) {
        ++count;
        const double delta = v - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (v - mean);
    }
    stat.mean = mean;
    if (stat.n >= 2) {
        stat.sample_stddev = std::sqrt(m2 / static_cast<double>(stat.n - 1));
        stat.standard_error = stat.sample_stddev / std::sqrt(static_cast<double>(stat.n));
        stat.ci95_low = stat.mean - 1.96 * stat.standard_error;
        stat.ci95_high = stat.mean + 1.96 * stat.standard_error;
    }
    return stat;
}

double scaling_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw std::invalid_argument("scaling_fit: need at least 3 points");
    double sum_x = 0.0, sum_y = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("scaling_fit: values must be positive");
        sum_x += std::log(x);
        sum_y += std::log(y);
    }
    const double mean_x = sum_x / static_cast<double>(points.size());
    const double mean_y = sum_y / static_cast<double>(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mean_x;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("scaling_fit: x values must not be identical");
    return sxy / sxx;
}

std::vector<SchemeSummary> summarize_generations_to_target(const ExperimentTable& table) {
    std::vector<SchemeSummary> out;
    out.reserve(table.schemes.size());
    for (std::size_t s = 0; s < table.schemes.size(); ++s) {
        SchemeSummary summary;
        summary.scheme = scheme_name(table.schemes[s]);
        std::vector<double> values;
        for (const RunRecord& record : table.records[s]) {
            if (record.target_reached)
                values.push_back(record.generations_to_target);
            else
                ++summary.failures;
        }
        if (!values.empty()) summary.stat = summarize(values);
        out.push_back(std::move(summary));
    }
    return out;
}

std::vector<SchemeSummary> summarize_final_best(const ExperimentTable& table) {
    std::vector<SchemeSummary> out;
    out.reserve(table.schemes.size());
    const double sign = table.minimizing ? -1.0 : 1.0;
    for (std::size_t s = 0; s < table.schemes.size(); ++s) {
        SchemeSummary summary;
        summary.scheme = scheme_name(table.schemes[s]);
        std::vector<double> values;
        for (const RunRecord& record : table.records[s]) values.push_back(sign * record.best_ever);
        summary.stat = summarize(values);
        out.push_back(std::move(summary));
    }
    return out;
}

namespace {

// Empty field for NaN so absent statistics stay machine-distinguishable.
void put_field(std::ostream& out, double value) {
    if (!std::isnan(value)) out << detail::format_double(value);
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunRecord& record, bool minimizing) {
    out << "iteration,generation,best_ever_fitness";
    if (record.has_diversity) out << ",population_diversity,top_fraction_diversity";
    out << '\n';
    const double sign = minimizing ? -1.0 : 1.0;
    for (const TracePoint& point : record.trace) {
        out << point.iteration << ',' << detail::format_double(point.generation) << ','
            << detail::format_double(sign * point.best_ever);
        if (record.has_diversity) {
            out << ',';
            put_field(out, point.population_diversity);
            out << ',';
            put_field(out, point.top_fraction_diversity);
        }
        out << '\n';
    }
}

void write_summary_csv(std::ostream& out, std::span<const SchemeSummary> summaries) {
    out << "scheme,mean,stddev,stderr,ci_low,ci_high,n,failures\n";
    for (const SchemeSummary& s : summaries) {
        out << s.scheme << ',';
        if (s.stat.n > 0) put_field(out, s.stat.mean);
        out << ',';
        put_field(out, s.stat.sample_stddev);
        out << ',';
        put_field(out, s.stat.standard_error);
        out << ',';
        put_field(out, s.stat.ci95_low);
        out << ',';
        put_field(out, s.stat.ci95_high);
        out << ',' << s.stat.n << ',' << s.failures << '\n';
    }
}

std::vector<SchemeSummary> write_experiment_csvs(const std::filesystem::path& dir,
                                                 const ExperimentTable& table,
                                                 const ExperimentSpec& spec) {
    std::filesystem::create_directories(dir);
    for (std::size_t s = 0; s < table.schemes.size(); ++s) {
        const std::string name = scheme_name(table.schemes[s]);
        for (std::uint32_t r = 0; r < table.replications; ++r) {
            const auto path = dir / ("trace_" + name + "_r" + std::to_string(r) + ".csv");
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            write_trace_csv(out, table.records[s][r], table.minimizing);
        }
    }
    const auto summaries = spec.stop.target_fitness ? summarize_generations_to_target(table)
                                                    : summarize_final_best(table);
    const auto path = dir / "summary.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_summary_csv(out, summaries);
    return summaries;
}

}  // namespace fuss
