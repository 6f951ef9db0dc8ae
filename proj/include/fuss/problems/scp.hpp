#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fuss/rng.hpp"

namespace fuss {

/// Set covering instance: binary m x n cover matrix stored in both
/// directions, plus strictly positive column costs.
struct ScpInstance {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> costs;
    std::vector<std::vector<std::uint32_t>> cols_covering_row;  // row -> columns
    std::vector<std::vector<std::uint32_t>> rows_covered_by_col;  // column -> rows

    bool integer_costs() const;
    void validate() const;  // throws if a row is uncoverable or a cost is nonpositive
};

/// Column subset as a bit vector of size n.
struct CoverGenome {
    std::vector<std::uint8_t> bits;
};

bool scp_feasible(const CoverGenome& g, const ScpInstance& inst);

/// Sum of selected column costs. The genome must be feasible; operators run
/// repair before evaluation.
double scp_cost(const CoverGenome& g, const ScpInstance& inst);

/// Greedy repair: cover each uncovered row (in row order) with the column of
/// minimum cost per newly covered row, then drop redundant columns in
/// decreasing cost order. Idempotent; the result is always feasible.
CoverGenome scp_repair(const CoverGenome& g, const ScpInstance& inst);

/// Flip 1 + Geometric(mean 2) uniformly chosen distinct bits, then repair.
CoverGenome scp_mutate(const CoverGenome& g, const ScpInstance& inst, Rng& rng);

/// Uniform fusion: each bit from a uniformly chosen parent, then repair.
CoverGenome scp_crossover(const CoverGenome& p, const CoverGenome& q, const ScpInstance& inst,
                          Rng& rng);

/// OR-Library layout: "m n", the n costs, then per row a count followed by
/// that many 1-based column indices. Throws ParseError (line numbered).
ScpInstance parse_orlib(std::istream& in);
void save_orlib(std::ostream& out, const ScpInstance& inst);

class ScpProblem {
  public:
    using Genome = CoverGenome;

    explicit ScpProblem(ScpInstance inst) : inst_(std::move(inst)), integer_(inst_.integer_costs()) {
        inst_.validate();
    }

    Genome random_genome(Rng& rng) const {
        CoverGenome g;
        g.bits.resize(inst_.cols);
        for (auto& bit : g.bits) bit = chance(rng, 0.5) ? 1 : 0;
        return scp_repair(g, inst_);
    }
    double fitness(const Genome& g) const { return -scp_cost(g, inst_); }
    Genome mutate(const Genome& g, Rng& rng) const { return scp_mutate(g, inst_, rng); }
    Genome crossover(const Genome& a, const Genome& b, Rng& rng) const {
        return scp_crossover(a, b, inst_, rng);
    }
    bool integer_fitness() const { return integer_; }
    bool minimizing() const { return true; }

    const ScpInstance& instance() const { return inst_; }

  private:
    ScpInstance inst_;
    bool integer_;
};

}  // namespace fuss
