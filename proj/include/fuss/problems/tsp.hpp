#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fuss/rng.hpp"

namespace fuss {

/// Symmetric TSP instance: full distance matrix plus, for coordinate-based
/// instances, the city locations. Random-matrix instances need not satisfy
/// the triangle inequality.
struct TspInstance {
    enum class Source { RandomMatrix, Coordinates };

    std::size_t n = 0;
    std::vector<double> dist;  // n*n row-major, symmetric, zero diagonal
    Source source = Source::RandomMatrix;
    std::vector<std::array<double, 2>> coords;  // Coordinates source only

    double distance(std::size_t i, std::size_t j) const { return dist[i * n + j]; }
};

using Tour = std::vector<std::uint32_t>;

/// Cycle length: consecutive legs plus the closing edge back to the start.
double tour_length(const Tour& tour, const TspInstance& inst);

/// Exchange the cities at two distinct uniformly chosen positions.
Tour swap_mutate(const Tour& tour, Rng& rng);

/// Partially mapped crossover with uniformly chosen cut points: the segment
/// is copied from `first`, the rest filled from `second`, conflicts resolved
/// through the segment's position mapping. Always yields a valid permutation.
Tour pmx_crossover(const Tour& first, const Tour& second, Rng& rng);

/// PMX with explicit cut points: segment is [cut1, cut2) of `first`.
Tour pmx_crossover_with_cuts(const Tour& first, const Tour& second, std::size_t cut1,
                             std::size_t cut2);

/// Distances drawn uniformly from [0,1) for the upper triangle, mirrored.
TspInstance random_tsp_instance(std::size_t n, Rng& rng);

/// One city per line as "id x y"; header lines beginning with a letter are
/// skipped. Distances are Euclidean.
TspInstance load_tsp_coordinates(std::istream& in);
void save_tsp_coordinates(std::ostream& out, const TspInstance& inst);

/// Matrix form: first line n, then the strict upper triangle one row per line.
TspInstance load_tsp_matrix(std::istream& in);
void save_tsp_matrix(std::ostream& out, const TspInstance& inst);

class TspProblem {
  public:
    using Genome = Tour;

    explicit TspProblem(TspInstance inst) : inst_(std::move(inst)) {}

    Genome random_genome(Rng& rng) const;
    double fitness(const Genome& g) const { return -tour_length(g, inst_); }
    Genome mutate(const Genome& g, Rng& rng) const { return swap_mutate(g, rng); }
    Genome crossover(const Genome& a, const Genome& b, Rng& rng) const {
        return pmx_crossover(a, b, rng);
    }
    bool integer_fitness() const { return false; }
    bool minimizing() const { return true; }

    const TspInstance& instance() const { return inst_; }

  private:
    TspInstance inst_;
};

}  // namespace fuss
