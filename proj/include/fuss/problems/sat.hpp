#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fuss/rng.hpp"

namespace fuss {

/// CNF formula with clauses of 2 or 3 signed literals (positive literal k
/// means variable k, negative means its negation; variables are 1-based).
/// Clauses are stored flat for cheap evaluation.
class CnfFormula {
  public:
    CnfFormula() = default;
    CnfFormula(std::uint32_t num_vars, const std::vector<std::vector<std::int32_t>>& clauses);

    std::uint32_t num_vars() const { return num_vars_; }
    std::size_t num_clauses() const { return offsets_.size() - 1; }
    std::span<const std::int32_t> clause(std::size_t i) const {
        return {lits_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    bool operator==(const CnfFormula&) const = default;

  private:
    std::uint32_t num_vars_ = 0;
    std::vector<std::int32_t> lits_;
    std::vector<std::size_t> offsets_{0};
};

struct AssignmentGenome {
    std::vector<std::uint8_t> bits;
};

/// Number of clauses with at least one true literal.
int count_satisfied(const AssignmentGenome& a, const CnfFormula& f);

/// Flip exactly one uniformly chosen variable.
AssignmentGenome flip_mutate(const AssignmentGenome& a, Rng& rng);

/// Each variable's state taken from a uniformly chosen parent.
AssignmentGenome uniform_crossover(const AssignmentGenome& p, const AssignmentGenome& q, Rng& rng);

/// DIMACS CNF reader: 'c' comments, one "p cnf <vars> <clauses>" line, then
/// 0-terminated clauses (possibly spanning lines). Tolerates the trailing
/// '%' end marker some benchmark files carry. Throws ParseError.
CnfFormula parse_dimacs(std::istream& in);
void save_dimacs(std::ostream& out, const CnfFormula& f);

/// Random 3-CNF: each clause has 3 distinct variables with random signs.
CnfFormula random_3cnf(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng);

/// Random 3-CNF guaranteed satisfiable by a planted assignment (clauses are
/// redrawn until the planted assignment satisfies them).
CnfFormula random_satisfiable_3cnf(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng);

class SatProblem {
  public:
    using Genome = AssignmentGenome;

    explicit SatProblem(CnfFormula formula) : formula_(std::move(formula)) {}

    Genome random_genome(Rng& rng) const {
        Genome g;
        g.bits.resize(formula_.num_vars());
        for (auto& bit : g.bits) bit = chance(rng, 0.5) ? 1 : 0;
        return g;
    }
    double fitness(const Genome& g) const {
        return static_cast<double>(count_satisfied(g, formula_));
    }
    Genome mutate(const Genome& g, Rng& rng) const { return flip_mutate(g, rng); }
    Genome crossover(const Genome& a, const Genome& b, Rng& rng) const {
        return uniform_crossover(a, b, rng);
    }
    bool integer_fitness() const { return true; }
    bool minimizing() const { return false; }

    const CnfFormula& formula() const { return formula_; }

  private:
    CnfFormula formula_;
};

}  // namespace fuss
