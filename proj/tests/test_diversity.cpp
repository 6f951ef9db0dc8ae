#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fuss/diversity.hpp"
#include "fuss/problems/sat.hpp"

using namespace fuss;

namespace {

std::vector<std::uint8_t> bits(std::initializer_list<int> values) {
    std::vector<std::uint8_t> out;
    for (const int v : values) out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

Population<AssignmentGenome> population_of(const std::vector<std::vector<std::uint8_t>>& genomes,
                                           const std::vector<double>& fitnesses) {
    Population<AssignmentGenome> pop;
    for (std::size_t i = 0; i < genomes.size(); ++i)
        pop.insert({AssignmentGenome{genomes[i]}, fitnesses[i]});
    return pop;
}

}  // namespace

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(bits({1, 0, 1}), bits({1, 0, 1})) == 0);
    CHECK(hamming_distance(bits({0, 0, 0, 0, 0, 0, 0, 0}), bits({1, 1, 1, 1, 1, 1, 1, 1})) == 8);
    REQUIRE_THROWS_AS(hamming_distance(bits({1, 0}), bits({1, 0, 1})), std::invalid_argument);

    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint8_t> a(32), b(32);
        for (auto& v : a) v = chance(rng, 0.5);
        for (auto& v : b) v = chance(rng, 0.5);
        int recount = 0;
        for (std::size_t i = 0; i < 32; ++i)
            if (a[i] != b[i]) ++recount;
        REQUIRE(hamming_distance(a, b) == recount);
    }
}

TEST_CASE("mean pairwise diversity") {
    Rng rng(2);
    SUBCASE("identical genomes have zero diversity") {
        const auto all_same = bits({1, 0, 1, 1});
        std::vector<std::span<const std::uint8_t>> same{all_same, all_same, all_same};
        CHECK(mean_pairwise_diversity(same, 200, rng) == 0.0);
    }
    SUBCASE("two complementary genomes have diversity 1") {
        const auto a = bits({0, 0, 0, 0});
        const auto b = bits({1, 1, 1, 1});
        std::vector<std::span<const std::uint8_t>> pair{a, b};
        CHECK(mean_pairwise_diversity(pair, 200, rng) == 1.0);
    }
    SUBCASE("uniform random genomes of length 100 sit near 0.5") {
        std::vector<std::vector<std::uint8_t>> genomes(50, std::vector<std::uint8_t>(100));
        for (auto& g : genomes)
            for (auto& v : g) v = chance(rng, 0.5);
        std::vector<std::span<const std::uint8_t>> views(genomes.begin(), genomes.end());
        const auto d = mean_pairwise_diversity(views, 200, rng);
        REQUIRE(d.has_value());
        CHECK(std::abs(*d - 0.5) < 0.02);
    }
    SUBCASE("fewer than two genomes is absent") {
        const auto a = bits({1, 0});
        std::vector<std::span<const std::uint8_t>> one{a};
        CHECK_FALSE(mean_pairwise_diversity(one, 200, rng).has_value());
    }
    SUBCASE("subsampling caps the pair count but stays close to the full value") {
        std::vector<std::vector<std::uint8_t>> genomes(400, std::vector<std::uint8_t>(64));
        for (auto& g : genomes)
            for (auto& v : g) v = chance(rng, 0.5);
        std::vector<std::span<const std::uint8_t>> views(genomes.begin(), genomes.end());
        const auto capped = mean_pairwise_diversity(views, 100, rng);
        const auto full = mean_pairwise_diversity(views, 400, rng);
        REQUIRE(capped.has_value());
        CHECK(std::abs(*capped - *full) < 0.03);
    }
    SUBCASE("permutation of the input order does not change the full-pair value") {
        std::vector<std::vector<std::uint8_t>> genomes(20, std::vector<std::uint8_t>(32));
        for (auto& g : genomes)
            for (auto& v : g) v = chance(rng, 0.5);
        std::vector<std::span<const std::uint8_t>> views(genomes.begin(), genomes.end());
        const auto before = mean_pairwise_diversity(views, 200, rng);
        std::reverse(views.begin(), views.end());
        const auto after = mean_pairwise_diversity(views, 200, rng);
        CHECK(*before == *after);
    }
}

TEST_CASE("top fraction diversity") {
    Rng rng(3);
    SUBCASE("fraction 1 equals whole-population diversity") {
        std::vector<std::vector<std::uint8_t>> genomes(12, std::vector<std::uint8_t>(16));
        std::vector<double> fitnesses;
        for (std::size_t i = 0; i < genomes.size(); ++i) {
            for (auto& v : genomes[i]) v = chance(rng, 0.5);
            fitnesses.push_back(static_cast<double>(i));
        }
        const auto pop = population_of(genomes, fitnesses);
        const auto whole = population_diversity(pop, 200, rng);
        const auto top = top_fraction_diversity(pop, 1.0, 200, rng);
        CHECK(*whole == *top);
    }
    SUBCASE("a top set of one member has no pairs") {
        const auto pop = population_of({bits({1, 0}), bits({0, 1})}, {1.0, 2.0});
        CHECK_FALSE(top_fraction_diversity(pop, 0.4, 200, rng).has_value());
    }
    SUBCASE("hand population with a known top-3 set") {
        // Top 3 by fitness: two identical genomes plus one at distance 4 of
        // length 8; mean pairwise = (0 + 0.5 + 0.5) / 3.
        std::vector<std::vector<std::uint8_t>> genomes{
            bits({1, 1, 1, 1, 0, 0, 0, 0}), bits({1, 1, 1, 1, 0, 0, 0, 0}),
            bits({1, 1, 1, 1, 1, 1, 1, 1}), bits({0, 0, 0, 0, 0, 0, 0, 0}),
            bits({0, 1, 0, 1, 0, 1, 0, 1}), bits({1, 0, 1, 0, 1, 0, 1, 0}),
            bits({1, 1, 0, 0, 1, 1, 0, 0}), bits({0, 0, 1, 1, 0, 0, 1, 1}),
            bits({1, 0, 0, 1, 1, 0, 0, 1}), bits({0, 1, 1, 0, 0, 1, 1, 0}),
        };
        std::vector<double> fitnesses{9, 9, 9, 1, 1, 1, 1, 1, 1, 1};
        const auto pop = population_of(genomes, fitnesses);
        const auto top = top_fraction_diversity(pop, 0.3, 200, rng);
        REQUIRE(top.has_value());
        CHECK(*top == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("fraction outside (0,1] is rejected") {
        const auto pop = population_of({bits({1}), bits({0})}, {1.0, 2.0});
        REQUIRE_THROWS_AS(top_fraction_diversity(pop, 0.0, 200, rng), std::invalid_argument);
        REQUIRE_THROWS_AS(top_fraction_diversity(pop, 1.5, 200, rng), std::invalid_argument);
    }
}

TEST_CASE("fitness histogram") {
    SUBCASE("singleton population") {
        const auto pop = population_of({bits({1, 0})}, {5.0});
        const auto hist = fitness_histogram(pop);
        REQUIRE(hist.size() == 1);
        CHECK(hist.at(5) == 1);
    }
    SUBCASE("constructed population matches construction, empty levels at 0") {
        const auto pop = population_of(
            {bits({1}), bits({0}), bits({1}), bits({0}), bits({1})}, {1, 1, 2, 4, 4});
        const auto hist = fitness_histogram(pop);
        REQUIRE(hist.size() == 4);  // levels 1..4 inclusive
        CHECK(hist.at(1) == 2);
        CHECK(hist.at(2) == 1);
        CHECK(hist.at(3) == 0);
        CHECK(hist.at(4) == 2);
        std::size_t total = 0;
        for (const auto& [level, count] : hist) total += count;
        CHECK(total == pop.size());
    }
    SUBCASE("binned variant spans the real fitness range") {
        Population<AssignmentGenome> pop;
        for (int i = 0; i < 100; ++i)
            pop.insert({AssignmentGenome{bits({1})}, i / 10.0});
        const auto hist = binned_fitness_histogram(pop, 50);
        REQUIRE(hist.size() == 50);
        std::size_t total = 0;
        for (const auto& bin : hist) total += bin.count;
        CHECK(total == pop.size());
    }
}

TEST_CASE("snapshot bundles the metrics") {
    Rng rng(4);
    std::vector<std::vector<std::uint8_t>> genomes(30, std::vector<std::uint8_t>(24));
    std::vector<double> fitnesses;
    for (std::size_t i = 0; i < genomes.size(); ++i) {
        for (auto& v : genomes[i]) v = chance(rng, 0.5);
        fitnesses.push_back(static_cast<double>(i % 5));
    }
    const auto pop = population_of(genomes, fitnesses);
    const auto snap = take_snapshot(pop, 1234, 0.1, 200, rng);
    CHECK(snap.iteration == 1234);
    CHECK(snap.whole_population_diversity.has_value());
    CHECK(snap.top_fraction_diversity.has_value());
    CHECK(snap.fitness_histogram.size() == 5);
}
