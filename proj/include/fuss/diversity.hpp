#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fuss/population.hpp"
#include "fuss/rng.hpp"
#include "fuss/selection.hpp"

namespace fuss {

/// Genomes that expose a boolean sequence; the only kind the Hamming-based
/// diversity instrumentation is defined for.
template <typename G>
concept BitGenome = requires(const G& g) {
    { g.bits } -> std::convertible_to<const std::vector<std::uint8_t>&>;
};

int hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Mean normalized Hamming distance over all unordered pairs of the given
/// genomes. If there are more than `sample_cap` genomes a uniform subsample
/// of `sample_cap` is used. Absent when there are fewer than 2 genomes.
std::optional<double> mean_pairwise_diversity(
    const std::vector<std::span<const std::uint8_t>>& genomes, std::size_t sample_cap, Rng& rng);

template <typename G>
    requires BitGenome<G>
std::optional<double> population_diversity(const Population<G>& pop, std::size_t sample_cap,
                                           Rng& rng) {
    std::vector<std::span<const std::uint8_t>> views;
    views.reserve(pop.size());
    for (std::size_t slot = 0; slot < pop.size(); ++slot)
        views.emplace_back(pop[slot].genome.bits);
    return mean_pairwise_diversity(views, sample_cap, rng);
}

/// Diversity over the ceil(fraction * size) members of highest fitness.
/// Ties at the cutoff are filled with arbitrary tied members.
template <typename G>
    requires BitGenome<G>
std::optional<double> top_fraction_diversity(const Population<G>& pop, double fraction,
                                             std::size_t sample_cap, Rng& rng) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("fraction must be in (0,1]");
    if (pop.empty()) return std::nullopt;
    const std::size_t keep = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(pop.size())));
    std::vector<std::size_t> slots(pop.size());
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    std::nth_element(slots.begin(), slots.begin() + (keep - 1), slots.end(),
                     [&](std::size_t a, std::size_t b) {
                         return pop[a].fitness > pop[b].fitness;
                     });
    std::vector<std::span<const std::uint8_t>> views;
    views.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) views.emplace_back(pop[slots[i]].genome.bits);
    return mean_pairwise_diversity(views, sample_cap, rng);
}

/// Occupancy count per integer fitness level from f_min to f_max inclusive;
/// empty levels are present with count 0.
template <typename G>
std::map<long long, std::size_t> fitness_histogram(const Population<G>& pop) {
    std::map<long long, std::size_t> hist;
    if (pop.empty()) return hist;
    const auto table = FitnessLevelTable::from_population(pop);
    for (long long level = table.f_min; level <= table.f_max; ++level) hist[level] = 0;
    for (const auto& [level, count] : table.counts) hist[level] = count;
    return hist;
}

struct RealHistogramBin {
    double lower;
    std::size_t count;
};

/// Binned variant for real-valued fitness: `bins` equal-width bins spanning
/// [f_min, f_max]; the top edge is inclusive.
template <typename G>
std::vector<RealHistogramBin> binned_fitness_histogram(const Population<G>& pop,
                                                       std::size_t bins = 50) {
    if (bins == 0) throw std::invalid_argument("bins must be positive");
    std::vector<RealHistogramBin> hist;
    if (pop.empty()) return hist;
    const double lo = pop.min_fitness();
    const double hi = pop.max_fitness();
    if (lo == hi) {
        hist.push_back({lo, pop.size()});
        return hist;
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    hist.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) hist[i] = {lo + width * static_cast<double>(i), 0};
    for (const auto& [fitness, count] : pop.level_counts()) {
        auto bin = static_cast<std::size_t>((fitness - lo) / width);
        bin = std::min(bin, bins - 1);
        hist[bin].count += count;
    }
    return hist;
}

struct DiversitySnapshot {
    std::uint64_t iteration = 0;
    std::optional<double> whole_population_diversity;
    std::optional<double> top_fraction_diversity;
    double fraction = 0.1;
    std::map<long long, std::size_t> fitness_histogram;
};

template <typename G>
    requires BitGenome<G>
DiversitySnapshot take_snapshot(const Population<G>& pop, std::uint64_t iteration,
                                double fraction, std::size_t sample_cap, Rng& rng) {
    DiversitySnapshot snap;
    snap.iteration = iteration;
    snap.fraction = fraction;
    snap.whole_population_diversity = population_diversity(pop, sample_cap, rng);
    snap.top_fraction_diversity = top_fraction_diversity(pop, fraction, sample_cap, rng);
    snap.fitness_histogram = fitness_histogram(pop);
    return snap;
}

}  // namespace fuss
