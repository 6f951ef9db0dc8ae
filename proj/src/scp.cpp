#include "fuss/problems/scp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fuss/parse_error.hpp"
#include "text_io.hpp"

namespace fuss {

bool ScpInstance::integer_costs() const {
    for (const double c : costs)
        if (static_cast<double>(std::llround(c)) != c) return false;
    return true;
}

void ScpInstance::validate() const {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty SCP instance");
    if (costs.size() != cols || cols_covering_row.size() != rows ||
        rows_covered_by_col.size() != cols)
        throw std::invalid_argument("inconsistent SCP instance shape");
    for (const double c : costs)
        if (!(c > 0.0)) throw std::invalid_argument("column costs must be strictly positive");
    for (std::size_t i = 0; i < rows; ++i)
        if (cols_covering_row[i].empty())
            throw std::invalid_argument("row " + std::to_string(i + 1) + " is uncoverable");
}

bool scp_feasible(const CoverGenome& g, const ScpInstance& inst) {
    assert(g.bits.size() == inst.cols);
    for (std::size_t i = 0; i < inst.rows; ++i) {
        bool covered = false;
        for (const std::uint32_t j : inst.cols_covering_row[i]) {
            if (g.bits[j]) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

double scp_cost(const CoverGenome& g, const ScpInstance& inst) {
    if (!scp_feasible(g, inst))
        throw std::invalid_argument("scp_cost: infeasible genome (repair must run first)");
    double total = 0.0;
    for (std::size_t j = 0; j < inst.cols; ++j)
        if (g.bits[j]) total += inst.costs[j];
    return total;
}

CoverGenome scp_repair(const CoverGenome& g, const ScpInstance& inst) {
    assert(g.bits.size() == inst.cols);
    CoverGenome out = g;

    std::vector<std::uint32_t> cover_count(inst.rows, 0);
    for (std::size_t j = 0; j < inst.cols; ++j)
        if (out.bits[j])
            for (const std::uint32_t r : inst.rows_covered_by_col[j]) ++cover_count[r];

    // Greedy cover phase, rows in order; ties on the ratio go to the lowest
    // column index.
    for (std::size_t i = 0; i < inst.rows; ++i) {
        if (cover_count[i] > 0) continue;
        std::uint32_t best_col = 0;
        double best_ratio = 0.0;
        bool found = false;
        for (const std::uint32_t j : inst.cols_covering_row[i]) {
            if (out.bits[j]) continue;
            std::size_t newly_covered = 0;
            for (const std::uint32_t r : inst.rows_covered_by_col[j])
                if (cover_count[r] == 0) ++newly_covered;
            const double ratio = inst.costs[j] / static_cast<double>(newly_covered);
            if (!found || ratio < best_ratio || (ratio == best_ratio && j < best_col)) {
                best_col = j;
                best_ratio = ratio;
                found = true;
            }
        }
        assert(found);  // guaranteed by the instance invariant
        out.bits[best_col] = 1;
        for (const std::uint32_t r : inst.rows_covered_by_col[best_col]) ++cover_count[r];
    }

    // Redundancy elimination, most expensive first; ties by higher index.
    std::vector<std::uint32_t> selected;
    for (std::size_t j = 0; j < inst.cols; ++j)
        if (out.bits[j]) selected.push_back(static_cast<std::uint32_t>(j));
    std::sort(selected.begin(), selected.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (inst.costs[a] != inst.costs[b]) return inst.costs[a] > inst.costs[b];
        return a > b;
    });
    for (const std::uint32_t j : selected) {
        bool redundant = true;
        for (const std::uint32_t r : inst.rows_covered_by_col[j]) {
            if (cover_count[r] < 2) {
                redundant = false;
                break;
            }
        }
        if (redundant) {
            out.bits[j] = 0;
            for (const std::uint32_t r : inst.rows_covered_by_col[j]) --cover_count[r];
        }
    }
    return out;
}

CoverGenome scp_mutate(const CoverGenome& g, const ScpInstance& inst, Rng& rng) {
    std::size_t flips = 1 + static_cast<std::size_t>(
                                std::geometric_distribution<int>(1.0 / 3.0)(rng));
    flips = std::min(flips, inst.cols);

    CoverGenome out = g;
    // Partial Fisher-Yates for `flips` distinct positions.
    std::vector<std::uint32_t> idx(inst.cols);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t i = 0; i < flips; ++i) {
        std::swap(idx[i], idx[i + uniform_index(rng, idx.size() - i)]);
        out.bits[idx[i]] ^= 1;
    }
    return scp_repair(out, inst);
}

CoverGenome scp_crossover(const CoverGenome& p, const CoverGenome& q, const ScpInstance& inst,
                          Rng& rng) {
    assert(p.bits.size() == q.bits.size());
    CoverGenome child;
    child.bits.resize(inst.cols);
    for (std::size_t j = 0; j < inst.cols; ++j)
        child.bits[j] = chance(rng, 0.5) ? p.bits[j] : q.bits[j];
    return scp_repair(child, inst);
}

ScpInstance parse_orlib(std::istream& in) {
    detail::TokenReader reader(in);
    const long long m = reader.next_int("row count");
    const long long n = reader.next_int("column count");
    if (m <= 0 || n <= 0) throw ParseError(reader.line(), "row and column counts must be positive");

    ScpInstance inst;
    inst.rows = static_cast<std::size_t>(m);
    inst.cols = static_cast<std::size_t>(n);
    inst.costs.reserve(inst.cols);
    for (std::size_t j = 0; j < inst.cols; ++j) {
        const double c = reader.next_double("column cost");
        if (!(c > 0.0)) throw ParseError(reader.line(), "column cost must be strictly positive");
        inst.costs.push_back(c);
    }

    inst.cols_covering_row.resize(inst.rows);
    inst.rows_covered_by_col.resize(inst.cols);
    for (std::size_t i = 0; i < inst.rows; ++i) {
        const long long k = reader.next_int("covering-column count");
        if (k <= 0)
            throw ParseError(reader.line(),
                             "row " + std::to_string(i + 1) + " has no covering columns");
        for (long long t = 0; t < k; ++t) {
            const long long col = reader.next_int("column index");
            if (col < 1 || col > n)
                throw ParseError(reader.line(),
                                 "column index " + std::to_string(col) + " out of range [1, " +
                                     std::to_string(n) + "]");
            inst.cols_covering_row[i].push_back(static_cast<std::uint32_t>(col - 1));
        }
        auto& row = inst.cols_covering_row[i];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (const std::uint32_t j : row)
            inst.rows_covered_by_col[j].push_back(static_cast<std::uint32_t>(i));
    }
    if (!reader.at_end()) throw ParseError(reader.line(), "trailing content after the last row");
    inst.validate();
    return inst;
}

void save_orlib(std::ostream& out, const ScpInstance& inst) {
    out << inst.rows << ' ' << inst.cols << '\n';
    for (std::size_t j = 0; j < inst.cols; ++j) {
        if (j > 0) out << (j % 12 == 0 ? '\n' : ' ');
        out << detail::format_double(inst.costs[j]);
    }
    out << '\n';
    for (std::size_t i = 0; i < inst.rows; ++i) {
        out << inst.cols_covering_row[i].size() << '\n';
        const auto& row = inst.cols_covering_row[i];
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (t > 0) out << (t % 12 == 0 ? '\n' : ' ');
            out << (row[t] + 1);
        }
        out << '\n';
    }
}

}  // namespace fuss
