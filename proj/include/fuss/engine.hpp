#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fuss/diversity.hpp"
#include "fuss/population.hpp"
#include "fuss/rng.hpp"
#include "fuss/scheme.hpp"
#include "fuss/selection.hpp"

namespace fuss {

/// A problem bundles the fitness function, variation operators and a random
/// genome generator. `fitness` is engine-internal (maximization): minimizing
/// problems return the negated cost and set `minimizing()` so reporting can
/// un-negate.
template <typename P>
concept Problem = std::copyable<P> &&
    requires(const P& p, const typename P::Genome& g, Rng& rng) {
        { p.random_genome(rng) } -> std::same_as<typename P::Genome>;
        { p.fitness(g) } -> std::convertible_to<double>;
        { p.mutate(g, rng) } -> std::same_as<typename P::Genome>;
        { p.crossover(g, g, rng) } -> std::same_as<typename P::Genome>;
        { p.integer_fitness() } -> std::convertible_to<bool>;
        { p.minimizing() } -> std::convertible_to<bool>;
    };

template <Problem P>
double display_fitness(const P& problem, double engine_fitness) {
    return problem.minimizing() ? -engine_fitness : engine_fitness;
}

struct GaParams {
    std::size_t max_population = 1000;
    std::size_t initial_population = 1000;
    double crossover_probability = 0.5;
    double mutate_probability = 0.5;
    std::uint64_t iteration_budget = 100000;
    std::uint64_t rng_seed = 1;

    void validate() const {
        if (max_population == 0) throw std::invalid_argument("max_population must be positive");
        if (initial_population == 0 || initial_population > max_population)
            throw std::invalid_argument("initial_population must be in [1, max_population]");
        if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
            throw std::invalid_argument("crossover_probability must be in [0,1]");
        if (!(mutate_probability >= 0.0 && mutate_probability <= 1.0))
            throw std::invalid_argument("mutate_probability must be in [0,1]");
    }
};

/// The run stops when the iteration budget is exhausted or, if set, as soon
/// as best-ever fitness reaches `target_fitness` (engine orientation).
struct StopRule {
    std::optional<double> target_fitness;
};

struct TraceOptions {
    std::uint64_t stride = 0;            ///< 0 -> max_population / 10, min 1
    bool diversity = false;              ///< bit-sequence genomes only
    double top_fraction = 0.1;
    std::size_t diversity_sample_cap = 200;
    std::uint64_t diversity_stride = 0;  ///< 0 -> max_population (once per generation)
};

template <typename G>
struct StepOutcome {
    Individual<G> child;
    bool crossed = false;
    bool mutated = false;
    std::optional<std::size_t> deleted_slot;
};

struct TracePoint {
    std::uint64_t iteration = 0;
    double generation = 0.0;
    double best_ever = 0.0;
    double population_diversity = std::numeric_limits<double>::quiet_NaN();
    double top_fraction_diversity = std::numeric_limits<double>::quiet_NaN();
};

struct RunRecord {
    std::vector<TracePoint> trace;
    std::uint64_t iterations = 0;
    double generations = 0.0;
    double best_ever = -std::numeric_limits<double>::infinity();
    bool target_reached = false;
    std::uint64_t iterations_to_target = 0;
    double generations_to_target = std::numeric_limits<double>::quiet_NaN();
    bool has_diversity = false;
};

template <Problem P>
Population<typename P::Genome> initialize_population(const P& problem, const GaParams& params,
                                                     Rng& rng) {
    params.validate();
    Population<typename P::Genome> pop;
    for (std::size_t i = 0; i < params.initial_population; ++i) {
        Individual<typename P::Genome> ind{problem.random_genome(rng), 0.0};
        ind.fitness = problem.fitness(ind.genome);
        pop.insert(std::move(ind));
    }
    return pop;
}

/// One steady-state iteration. RNG draws occur in this fixed order:
///   1. parent A selection
///   2. crossover coin
///   3. if crossing: parent B selection, then crossover operator draws
///   4. mutation coin (crossover branch only; mutation is mandatory otherwise)
///   5. mutation operator draws (when mutating)
///   6. deletion index (only once the population exceeds max_population)
template <Problem P>
StepOutcome<typename P::Genome> step(Population<typename P::Genome>& pop, const P& problem,
                                     const SelectionScheme& scheme, const GaParams& params,
                                     Rng& rng) {
    using G = typename P::Genome;
    if (pop.empty()) throw std::invalid_argument("step: empty population");

    const std::size_t parent_a = select(pop, scheme, rng);
    G child_genome = pop[parent_a].genome;
    const bool crossed = chance(rng, params.crossover_probability);
    if (crossed) {
        const std::size_t parent_b = select(pop, scheme, rng);
        child_genome = problem.crossover(child_genome, pop[parent_b].genome, rng);
    }
    const bool mutated = crossed ? chance(rng, params.mutate_probability) : true;
    if (mutated) child_genome = problem.mutate(child_genome, rng);

    Individual<G> child{std::move(child_genome), 0.0};
    child.fitness = problem.fitness(child.genome);

    StepOutcome<G> outcome{child, crossed, mutated, std::nullopt};
    pop.insert(std::move(child));
    if (pop.size() > params.max_population) {
        const std::size_t victim = pop.sample_member(rng);
        outcome.deleted_slot = victim;
        pop.erase(victim);
    }
    return outcome;
}

/// Full run: initialize, iterate until the stop rule fires, and record the
/// best-ever fitness trace. Two runs with identical seed, params, problem
/// and scheme produce identical records.
template <Problem P>
RunRecord run(const P& problem, const SelectionScheme& scheme, const GaParams& params,
              const StopRule& stop = {}, const TraceOptions& trace_opts = {}) {
    params.validate();
    if (needs_integer_fitness(scheme) && !problem.integer_fitness())
        throw std::invalid_argument(scheme_name(scheme) +
                                    " requires a problem with integer fitness");
    if (const auto* tournament = std::get_if<Tournament>(&scheme); tournament && tournament->size < 1)
        throw std::invalid_argument("tournament size must be at least 1");

    using G = typename P::Genome;
    const std::uint64_t stride =
        trace_opts.stride > 0 ? trace_opts.stride
                              : std::max<std::uint64_t>(1, params.max_population / 10);
    const std::uint64_t diversity_stride =
        trace_opts.diversity_stride > 0 ? trace_opts.diversity_stride
                                        : std::max<std::uint64_t>(1, params.max_population);
    constexpr bool kBitGenome = BitGenome<G>;
    const bool with_diversity = trace_opts.diversity && kBitGenome;

    Rng rng(params.rng_seed);
    // Instrumentation draws come from a separate stream so that enabling
    // diversity snapshots does not perturb the run itself.
    Rng probe_rng(params.rng_seed ^ 0x9e3779b97f4a7c15ull);

    Population<G> pop = initialize_population(problem, params, rng);

    RunRecord record;
    record.has_diversity = with_diversity;
    record.best_ever = pop.max_fitness();

    auto note_target = [&](std::uint64_t iteration) {
        if (record.target_reached || !stop.target_fitness) return;
        if (record.best_ever >= *stop.target_fitness) {
            record.target_reached = true;
            record.iterations_to_target = iteration;
            record.generations_to_target =
                static_cast<double>(iteration) / static_cast<double>(params.max_population);
        }
    };
    auto snapshot = [&](std::uint64_t iteration, bool diversity_point) {
        TracePoint point;
        point.iteration = iteration;
        point.generation =
            static_cast<double>(iteration) / static_cast<double>(params.max_population);
        point.best_ever = record.best_ever;
        if constexpr (kBitGenome) {
            if (with_diversity && diversity_point) {
                if (auto d = population_diversity(pop, trace_opts.diversity_sample_cap, probe_rng))
                    point.population_diversity = *d;
                if (auto d = top_fraction_diversity(pop, trace_opts.top_fraction,
                                                    trace_opts.diversity_sample_cap, probe_rng))
                    point.top_fraction_diversity = *d;
            }
        }
        record.trace.push_back(point);
    };

    note_target(0);
    snapshot(0, true);

    std::uint64_t iteration = 0;
    while (iteration < params.iteration_budget && !record.target_reached) {
        step(pop, problem, scheme, params, rng);
        ++iteration;
        record.best_ever = std::max(record.best_ever, pop.max_fitness());
        note_target(iteration);
        const bool stopping = iteration == params.iteration_budget || record.target_reached;
        const bool diversity_point =
            with_diversity && (iteration % diversity_stride == 0 || stopping);
        if (iteration % stride == 0 || diversity_point || stopping)
            snapshot(iteration, diversity_point);
    }

    record.iterations = iteration;
    record.generations =
        static_cast<double>(iteration) / static_cast<double>(params.max_population);
    return record;
}

}  // namespace fuss
