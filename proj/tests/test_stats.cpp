#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fuss/problems/deceptive2d.hpp"
#include "fuss/stats.hpp"

using namespace fuss;

TEST_CASE("summarize on (2,4,6)") {
    const std::vector<double> values{2.0, 4.0, 6.0};
    const auto stat = summarize(values);
    CHECK(stat.mean == 4.0);
    CHECK(stat.sample_stddev == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(stat.standard_error - 1.1547) < 1e-4);
    CHECK(std::abs(stat.ci95_low - 1.737) < 1e-3);
    CHECK(std::abs(stat.ci95_high - 6.263) < 1e-3);
    CHECK(stat.n == 3);
}

TEST_CASE("summarize edge cases") {
    SUBCASE("constant sequence collapses the interval onto the mean") {
        const std::vector<double> values{3.0, 3.0, 3.0, 3.0};
        const auto stat = summarize(values);
        CHECK(stat.sample_stddev == 0.0);
        CHECK(stat.ci95_low == 3.0);
        CHECK(stat.ci95_high == 3.0);
    }
    SUBCASE("mean is translation-equivariant") {
        const std::vector<double> values{1.5, -2.0, 0.25, 7.75};
        std::vector<double> shifted;
        for (const double v : values) shifted.push_back(v + 10.0);
        CHECK(summarize(shifted).mean ==
              doctest::Approx(summarize(values).mean + 10.0).epsilon(1e-12));
    }
    SUBCASE("no values is an error; one value has no spread") {
        REQUIRE_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
        const auto stat = summarize(std::vector<double>{5.0});
        CHECK(stat.mean == 5.0);
        CHECK(stat.n == 1);
        CHECK_FALSE(stat.has_spread());
        CHECK(std::isnan(stat.sample_stddev));
        CHECK(std::isnan(stat.ci95_low));
    }
}

TEST_CASE("summarize matches a naive two-pass reference") {
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values;
        const std::size_t n = 2 + uniform_index(rng, 200);
        for (std::size_t i = 0; i < n; ++i) values.push_back(uniform_real(rng, -1e3, 1e3));

        double mean = 0.0;
        for (const double v : values) mean += v;
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (const double v : values) ss += (v - mean) * (v - mean);
        const double stddev = std::sqrt(ss / static_cast<double>(n - 1));

        const auto stat = summarize(values);
        CHECK(std::abs(stat.mean - mean) <= 1e-12 * std::max(1.0, std::abs(mean)));
        CHECK(std::abs(stat.sample_stddev - stddev) <= 1e-12 * std::max(1.0, stddev));
    }
}

TEST_CASE("scaling_fit recovers power-law slopes") {
    SUBCASE("exact 1/x data has slope -1") {
        const std::vector<std::pair<double, double>> points{{0.2, 5}, {0.1, 10}, {0.05, 20}};
        CHECK(std::abs(scaling_fit(points) - (-1.0)) < 1e-9);
    }
    SUBCASE("exact 1/x^2 data has slope -2") {
        const std::vector<std::pair<double, double>> points{{0.2, 25}, {0.1, 100}, {0.05, 400}};
        CHECK(std::abs(scaling_fit(points) - (-2.0)) < 1e-9);
    }
    SUBCASE("multiplicative noise shifts the slope only slightly") {
        Rng rng(2);
        for (int trial = 0; trial < 20; ++trial) {
            const double true_slope = -1.0 - uniform_real(rng, 0.0, 1.5);
            std::vector<std::pair<double, double>> points;
            for (const double x : {0.4, 0.2, 0.1, 0.05, 0.025}) {
                const double noise = 1.0 + uniform_real(rng, -0.1, 0.1);
                points.emplace_back(x, 3.0 * std::pow(x, true_slope) * noise);
            }
            CHECK(std::abs(scaling_fit(points) - true_slope) < 0.15);
        }
    }
    SUBCASE("rejects short or nonpositive input") {
        REQUIRE_THROWS_AS(scaling_fit(std::vector<std::pair<double, double>>{{1, 1}, {2, 2}}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(
            scaling_fit(std::vector<std::pair<double, double>>{{1, 1}, {2, 2}, {3, -1}}),
            std::invalid_argument);
    }
}

namespace {

ExperimentSpec small_spec() {
    ExperimentSpec spec;
    spec.schemes = {SelectionScheme{FussInteger{}}, SelectionScheme{Tournament{2}}};
    spec.params.max_population = 100;
    spec.params.initial_population = 10;
    spec.params.crossover_probability = 0.25;
    spec.params.iteration_budget = 20000;
    spec.params.rng_seed = 77;
    spec.replications = 4;
    spec.stop.target_fitness = Deceptive2dProblem::kOptimum;
    return spec;
}

auto deceptive_factory(double delta) {
    return [delta](std::uint32_t) { return Deceptive2dProblem({0.45, 0.45, delta}); };
}

}  // namespace

TEST_CASE("run_experiment: schemes share instances and seeds per replication") {
    const auto spec = small_spec();
    const auto table = run_experiment(deceptive_factory(0.2), spec);
    REQUIRE(table.records.size() == 2);
    REQUIRE(table.records[0].size() == 4);

    // Identical seed and instance: both schemes start from the same initial
    // population, so the iteration-0 trace points agree.
    for (std::uint32_t r = 0; r < spec.replications; ++r) {
        const auto& a = table.records[0][r].trace.front();
        const auto& b = table.records[1][r].trace.front();
        REQUIRE(a.iteration == 0);
        REQUIRE(a.best_ever == b.best_ever);
    }
}

TEST_CASE("run_experiment is deterministic") {
    const auto spec = small_spec();
    const auto a = run_experiment(deceptive_factory(0.2), spec);
    const auto b = run_experiment(deceptive_factory(0.2), spec);
    for (std::size_t s = 0; s < a.records.size(); ++s) {
        for (std::size_t r = 0; r < a.records[s].size(); ++r) {
            const auto& ra = a.records[s][r];
            const auto& rb = b.records[s][r];
            REQUIRE(ra.iterations == rb.iterations);
            REQUIRE(ra.best_ever == rb.best_ever);
            REQUIRE(ra.trace.size() == rb.trace.size());
            for (std::size_t i = 0; i < ra.trace.size(); ++i)
                REQUIRE(ra.trace[i].best_ever == rb.trace[i].best_ever);
        }
    }
}

TEST_CASE("generations-to-target summary separates failures") {
    auto spec = small_spec();
    spec.params.iteration_budget = 30;  // too small: most runs fail
    spec.stop.target_fitness = 4.0;
    const auto table = run_experiment(deceptive_factory(0.05), spec);
    const auto summaries = summarize_generations_to_target(table);
    REQUIRE(summaries.size() == 2);
    for (const auto& s : summaries)
        CHECK(s.stat.n + s.failures == spec.replications);
}

TEST_CASE("CSV writers: fixed columns, absent fields stay empty") {
    RunRecord record;
    record.trace.push_back({0, 0.0, 3.0, std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN()});
    record.trace.push_back({10, 0.1, 4.0, 0.5, 0.25});
    record.has_diversity = true;

    std::ostringstream out;
    write_trace_csv(out, record, false);
    CHECK(out.str() ==
          "iteration,generation,best_ever_fitness,population_diversity,top_fraction_diversity\n"
          "0,0,3,,\n"
          "10,0.1,4,0.5,0.25\n");

    SUBCASE("minimizing problems un-negate fitness for display") {
        std::ostringstream neg;
        record.has_diversity = false;
        write_trace_csv(neg, record, true);
        CHECK(neg.str() ==
              "iteration,generation,best_ever_fitness\n"
              "0,0,-3\n"
              "10,0.1,-4\n");
    }

    SUBCASE("summary layout") {
        SchemeSummary s;
        s.scheme = "fussint";
        s.stat = summarize(std::vector<double>{2.0, 4.0, 6.0});
        s.failures = 1;
        std::ostringstream sum;
        write_summary_csv(sum, std::vector<SchemeSummary>{s});
        const std::string text = sum.str();
        CHECK(text.find("scheme,mean,stddev,stderr,ci_low,ci_high,n,failures\n") == 0);
        CHECK(text.find("fussint,4,2,") != std::string::npos);
        CHECK(text.find(",3,1\n") != std::string::npos);
    }
}

TEST_CASE("experiment CSV files are byte-identical across re-runs") {
    const auto spec = small_spec();
    const auto dir_a = std::filesystem::temp_directory_path() / "fuss_stats_test_a";
    const auto dir_b = std::filesystem::temp_directory_path() / "fuss_stats_test_b";
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);

    write_experiment_csvs(dir_a, run_experiment(deceptive_factory(0.2), spec), spec);
    write_experiment_csvs(dir_b, run_experiment(deceptive_factory(0.2), spec), spec);

    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir_a)) {
        ++files;
        std::ifstream fa(entry.path(), std::ios::binary);
        std::ifstream fb(dir_b / entry.path().filename(), std::ios::binary);
        REQUIRE(fb.good());
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        REQUIRE(sa.str() == sb.str());
    }
    CHECK(files == spec.schemes.size() * spec.replications + 1);
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}
