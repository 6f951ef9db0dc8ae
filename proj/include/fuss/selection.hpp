#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fuss/population.hpp"
#include "fuss/rng.hpp"
#include "fuss/scheme.hpp"

namespace fuss {

/// Occupancy of integer fitness levels. f_min/f_max bracket the occupied
/// range; `counts` holds occupied levels only.
struct FitnessLevelTable {
    long long f_min = 0;
    long long f_max = 0;
    std::map<long long, std::size_t> counts;

    /// Level value of an integer-valued fitness. Throws if the value is not
    /// an exact integer (the problem must declare integer fitness).
    static long long integer_level(double fitness) {
        const long long level = std::llround(fitness);
        if (static_cast<double>(level) != fitness)
            throw std::invalid_argument("fitness value is not an integer level");
        return level;
    }

    template <typename G>
    static FitnessLevelTable from_population(const Population<G>& pop) {
        if (pop.empty()) throw std::invalid_argument("empty population");
        FitnessLevelTable table;
        for (const auto& [fitness, count] : pop.level_counts())
            table.counts.emplace(integer_level(fitness), count);
        table.f_min = table.counts.begin()->first;
        table.f_max = table.counts.rbegin()->first;
        return table;
    }

    std::size_t population_size() const {
        std::size_t total = 0;
        for (const auto& [level, count] : counts) total += count;
        return total;
    }
};

/// FUSS for real-valued fitness: draw a target uniformly in [f_min, f_max]
/// and return a member with fitness nearest the target, ties uniform over
/// all tied members.
template <typename G>
std::size_t fuss_select_real(const Population<G>& pop, Rng& rng) {
    assert(!pop.empty());
    const double lo = pop.min_fitness();
    const double hi = pop.max_fitness();
    if (lo == hi) return pop.sample_member(rng);
    return pop.sample_nearest(uniform_real(rng, lo, hi), rng);
}

namespace detail {

// Given a drawn level and the nearest occupied level on each side, resolve
// which occupied level receives the selection: the strictly nearer side wins;
// an exact distance tie is settled by a fair coin.
inline long long resolve_level(long long drawn, std::optional<long long> down,
                               std::optional<long long> up, Rng& rng) {
    assert(down || up);
    if (!up) return *down;
    if (!down) return *up;
    const long long d_up = *up - drawn;
    const long long d_down = drawn - *down;
    if (d_up < d_down) return *up;
    if (d_down < d_up) return *down;
    return chance(rng, 0.5) ? *up : *down;
}

}  // namespace detail

/// FUSS for integer fitness levels: pick a level uniformly from
/// {f_min..f_max}; if it is empty, progressively wider neighbourhoods are
/// searched and the nearest occupied level wins (fair coin on a distance
/// tie). A uniform member of the resulting level is returned.
template <typename G>
std::size_t fuss_select_integer(const FitnessLevelTable& table, const Population<G>& pop,
                                Rng& rng) {
    assert(!pop.empty());
    const long long drawn =
        std::uniform_int_distribution<long long>(table.f_min, table.f_max)(rng);
    auto up_it = table.counts.lower_bound(drawn);
    if (up_it != table.counts.end() && up_it->first == drawn)
        return pop.sample_at(static_cast<double>(drawn), rng);
    std::optional<long long> up, down;
    if (up_it != table.counts.end()) up = up_it->first;
    if (up_it != table.counts.begin()) down = std::prev(up_it)->first;
    const long long level = detail::resolve_level(drawn, down, up, rng);
    return pop.sample_at(static_cast<double>(level), rng);
}

/// Same scheme, driven directly off the population's own fitness index.
template <typename G>
std::size_t fuss_select_integer(const Population<G>& pop, Rng& rng) {
    assert(!pop.empty());
    const long long f_min = FitnessLevelTable::integer_level(pop.min_fitness());
    const long long f_max = FitnessLevelTable::integer_level(pop.max_fitness());
    const long long drawn = std::uniform_int_distribution<long long>(f_min, f_max)(rng);
    const double key = static_cast<double>(drawn);
    if (pop.count_at(key) > 0) return pop.sample_at(key, rng);
    std::optional<long long> up, down;
    if (auto v = pop.lowest_level_at_least(key)) up = FitnessLevelTable::integer_level(*v);
    if (auto v = pop.highest_level_at_most(key)) down = FitnessLevelTable::integer_level(*v);
    const long long level = detail::resolve_level(drawn, down, up, rng);
    return pop.sample_at(static_cast<double>(level), rng);
}

/// Sample `size` members uniformly with replacement and return the fittest;
/// ties are broken uniformly among the tied sampled members.
template <typename G>
std::size_t tournament_select(const Population<G>& pop, std::size_t size, Rng& rng) {
    assert(!pop.empty());
    assert(size >= 1);
    std::size_t best = pop.sample_member(rng);
    double best_fitness = pop[best].fitness;
    std::size_t tied = 1;
    for (std::size_t i = 1; i < size; ++i) {
        const std::size_t candidate = pop.sample_member(rng);
        const double fitness = pop[candidate].fitness;
        if (fitness > best_fitness) {
            best = candidate;
            best_fitness = fitness;
            tied = 1;
        } else if (fitness == best_fitness) {
            ++tied;
            if (uniform_index(rng, tied) == 0) best = candidate;
        }
    }
    return best;
}

template <typename G>
std::size_t random_select(const Population<G>& pop, Rng& rng) {
    assert(!pop.empty());
    return pop.sample_member(rng);
}

template <typename G>
std::size_t select(const Population<G>& pop, const SelectionScheme& scheme, Rng& rng) {
    return std::visit(detail::overloaded{
                          [&](FussReal) { return fuss_select_real(pop, rng); },
                          [&](FussInteger) { return fuss_select_integer(pop, rng); },
                          [&](const Tournament& t) { return tournament_select(pop, t.size, rng); },
                          [&](RandomSearch) { return random_select(pop, rng); },
                      },
                      scheme);
}

/// Exact per-member selection probabilities under a scheme; the independent
/// oracle the empirical-frequency tests converge to. Probabilities are
/// indexed by member slot and sum to 1 within 1e-12.
template <typename G>
std::vector<double> selection_probabilities(const Population<G>& pop,
                                            const SelectionScheme& scheme) {
    if (pop.empty()) throw std::invalid_argument("empty population");
    const std::size_t n = pop.size();
    std::vector<double> probs(n, 0.0);

    // Probability mass per occupied fitness value, split uniformly within.
    auto spread_level_mass = [&](const std::map<double, double>& level_mass) {
        for (std::size_t slot = 0; slot < n; ++slot) {
            const double f = pop[slot].fitness;
            probs[slot] = level_mass.at(f) / static_cast<double>(pop.count_at(f));
        }
    };

    std::visit(
        detail::overloaded{
            [&](RandomSearch) {
                for (auto& p : probs) p = 1.0 / static_cast<double>(n);
            },
            [&](const Tournament& t) {
                // P(member) = [((worse+equal)/n)^k - (worse/n)^k] / equal
                const auto levels = pop.level_counts();
                std::map<double, std::pair<std::size_t, std::size_t>> rank;  // f -> worse, equal
                std::size_t below = 0;
                for (const auto& [level, count] : levels) {
                    rank[level] = {below, count};
                    below += count;
                }
                const double k = static_cast<double>(t.size);
                for (std::size_t slot = 0; slot < n; ++slot) {
                    const auto [worse, equal] = rank.at(pop[slot].fitness);
                    const double at_most = static_cast<double>(worse + equal);
                    probs[slot] = (std::pow(at_most / n, k) -
                                   std::pow(static_cast<double>(worse) / n, k)) /
                                  static_cast<double>(equal);
                }
            },
            [&](FussReal) {
                const auto levels = pop.level_counts();
                std::map<double, double> mass;
                if (levels.size() == 1) {
                    mass[levels.front().first] = 1.0;
                } else {
                    // Midpoint partition of [f_min, f_max]: each occupied value
                    // attracts the targets nearer to it than to its neighbours.
                    const double range = levels.back().first - levels.front().first;
                    for (std::size_t i = 0; i < levels.size(); ++i) {
                        const double left =
                            i == 0 ? levels.front().first
                                   : (levels[i].first + levels[i - 1].first) / 2.0;
                        const double right =
                            i + 1 == levels.size()
                                ? levels.back().first
                                : (levels[i].first + levels[i + 1].first) / 2.0;
                        mass[levels[i].first] = (right - left) / range;
                    }
                }
                spread_level_mass(mass);
            },
            [&](FussInteger) {
                const auto table = FitnessLevelTable::from_population(pop);
                const double num_levels = static_cast<double>(table.f_max - table.f_min + 1);
                std::map<double, double> mass;
                for (const auto& [level, count] : table.counts)
                    mass[static_cast<double>(level)] = 0.0;
                for (long long drawn = table.f_min; drawn <= table.f_max; ++drawn) {
                    auto up_it = table.counts.lower_bound(drawn);
                    if (up_it != table.counts.end() && up_it->first == drawn) {
                        mass[static_cast<double>(drawn)] += 1.0 / num_levels;
                        continue;
                    }
                    std::optional<long long> up, down;
                    if (up_it != table.counts.end()) up = up_it->first;
                    if (up_it != table.counts.begin()) down = std::prev(up_it)->first;
                    if (up && down) {
                        const long long d_up = *up - drawn;
                        const long long d_down = drawn - *down;
                        if (d_up < d_down)
                            mass[static_cast<double>(*up)] += 1.0 / num_levels;
                        else if (d_down < d_up)
                            mass[static_cast<double>(*down)] += 1.0 / num_levels;
                        else {
                            mass[static_cast<double>(*up)] += 0.5 / num_levels;
                            mass[static_cast<double>(*down)] += 0.5 / num_levels;
                        }
                    } else {
                        mass[static_cast<double>(up ? *up : *down)] += 1.0 / num_levels;
                    }
                }
                spread_level_mass(mass);
            },
        },
        scheme);
    return probs;
}

}  // namespace fuss
