#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fuss/population.hpp"
#include "test_support.hpp"

using namespace fuss;
using testing::make_population;

namespace {

// Reference answers by linear scan.
double scan_min(const Population<int>& pop) {
    double best = pop[0].fitness;
    for (std::size_t i = 0; i < pop.size(); ++i) best = std::min(best, pop[i].fitness);
    return best;
}
double scan_max(const Population<int>& pop) {
    double best = pop[0].fitness;
    for (std::size_t i = 0; i < pop.size(); ++i) best = std::max(best, pop[i].fitness);
    return best;
}
std::set<double> scan_nearest(const Population<int>& pop, double target) {
    double best = std::abs(pop[0].fitness - target);
    for (std::size_t i = 0; i < pop.size(); ++i)
        best = std::min(best, std::abs(pop[i].fitness - target));
    std::set<double> levels;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (std::abs(pop[i].fitness - target) == best) levels.insert(pop[i].fitness);
    return levels;
}

}  // namespace

TEST_CASE("insert and erase keep the fitness index consistent") {
    Rng rng(7);
    Population<int> pop;
    // Values from a small grid so duplicate fitness levels are common.
    for (int round = 0; round < 4000; ++round) {
        if (pop.empty() || chance(rng, 0.6)) {
            const double fitness = static_cast<double>(uniform_index(rng, 12)) / 2.0;
            pop.insert({round, fitness});
        } else {
            pop.erase(pop.sample_member(rng));
        }
        if (round % 97 == 0) {
            REQUIRE(pop.index_consistent());
            if (!pop.empty()) {
                REQUIRE(pop.min_fitness() == scan_min(pop));
                REQUIRE(pop.max_fitness() == scan_max(pop));
            }
        }
    }
    REQUIRE(pop.index_consistent());
}

TEST_CASE("nearest-level lookup agrees with a linear scan, ties reported fully") {
    Rng rng(11);
    const auto pop = make_population({0.0, 0.0, 1.0, 2.5, 2.5, 2.5, 4.0, 9.0});
    for (int trial = 0; trial < 2000; ++trial) {
        const double target = uniform_real(rng, -1.0, 10.0);
        const auto expect = scan_nearest(pop, target);
        const auto got = pop.nearest_levels(target);
        std::set<double> got_set{got.primary};
        if (got.tied) got_set.insert(*got.tied);
        REQUIRE(got_set == expect);
    }

    SUBCASE("exact midpoint reports both levels") {
        const auto tie = pop.nearest_levels(0.5);
        REQUIRE(tie.primary == 0.0);
        REQUIRE(tie.tied.has_value());
        REQUIRE(*tie.tied == 1.0);
    }
}

TEST_CASE("count_at and level_counts reflect the multiset") {
    const auto pop = make_population({1.0, 1.0, 1.0, 3.0, 5.0, 5.0});
    REQUIRE(pop.count_at(1.0) == 3);
    REQUIRE(pop.count_at(5.0) == 2);
    REQUIRE(pop.count_at(2.0) == 0);
    const auto levels = pop.level_counts();
    REQUIRE(levels.size() == 3);
    REQUIRE(levels[0] == std::pair{1.0, std::size_t{3}});
    REQUIRE(levels[2] == std::pair{5.0, std::size_t{2}});
}

TEST_CASE("sample_at is uniform within a level") {
    auto pop = make_population({2.0, 2.0, 2.0, 2.0, 7.0});
    Rng rng(3);
    std::vector<int> hits(pop.size(), 0);
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) ++hits[pop.sample_at(2.0, rng)];
    REQUIRE(hits[4] == 0);
    for (int slot = 0; slot < 4; ++slot)
        REQUIRE(std::abs(hits[slot] / double(draws) - 0.25) < 0.02);
}

TEST_CASE("sample_nearest on an exact tie is uniform over the union of both levels") {
    // Levels 0.0 (3 members) and 1.0 (1 member); target 0.5 ties them, so all
    // four members are equally likely.
    auto pop = make_population({0.0, 0.0, 0.0, 1.0});
    Rng rng(5);
    std::vector<int> hits(pop.size(), 0);
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) ++hits[pop.sample_nearest(0.5, rng)];
    for (std::size_t slot = 0; slot < pop.size(); ++slot)
        REQUIRE(std::abs(hits[slot] / double(draws) - 0.25) < 0.02);
}
