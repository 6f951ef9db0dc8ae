#include "fuss/problems/sat.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fuss/parse_error.hpp"

namespace fuss {

CnfFormula::CnfFormula(std::uint32_t num_vars,
                       const std::vector<std::vector<std::int32_t>>& clauses)
    : num_vars_(num_vars) {
    lits_.reserve(clauses.size() * 3);
    for (const auto& clause : clauses) {
        if (clause.empty()) throw std::invalid_argument("empty clause");
        for (const std::int32_t lit : clause) {
            const auto var = static_cast<std::uint32_t>(std::abs(lit));
            if (lit == 0 || var > num_vars_)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
            lits_.push_back(lit);
        }
        offsets_.push_back(lits_.size());
    }
}

int count_satisfied(const AssignmentGenome& a, const CnfFormula& f) {
    if (a.bits.size() != f.num_vars())
        throw std::invalid_argument("assignment length does not match variable count");
    int satisfied = 0;
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
        for (const std::int32_t lit : f.clause(c)) {
            const bool value = a.bits[static_cast<std::size_t>(std::abs(lit)) - 1] != 0;
            if (lit > 0 ? value : !value) {
                ++satisfied;
                break;
            }
        }
    }
    return satisfied;
}

AssignmentGenome flip_mutate(const AssignmentGenome& a, Rng& rng) {
    assert(!a.bits.empty());
    AssignmentGenome out = a;
    out.bits[uniform_index(rng, out.bits.size())] ^= 1;
    return out;
}

AssignmentGenome uniform_crossover(const AssignmentGenome& p, const AssignmentGenome& q,
                                   Rng& rng) {
    assert(p.bits.size() == q.bits.size());
    AssignmentGenome child;
    child.bits.resize(p.bits.size());
    for (std::size_t i = 0; i < child.bits.size(); ++i)
        child.bits[i] = chance(rng, 0.5) ? p.bits[i] : q.bits[i];
    return child;
}

CnfFormula parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long declared_vars = -1;
    long long declared_clauses = -1;
    std::vector<std::vector<std::int32_t>> clauses;
    std::vector<std::int32_t> current;
    bool past_end_marker = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;  // blank line
        if (token.starts_with("c")) continue;  // comment line

        if (token == "p") {
            if (declared_vars >= 0) throw ParseError(line_no, "duplicate problem line");
            std::string format;
            if (!(fields >> format) || format != "cnf" ||
                !(fields >> declared_vars >> declared_clauses) || declared_vars <= 0 ||
                declared_clauses < 0)
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (fields >> extra)
                throw ParseError(line_no, "unexpected field '" + extra + "' on problem line");
            continue;
        }

        // Literal data. Clauses are 0-terminated and may span lines.
        do {
            if (token == "%") {  // benchmark end marker; only "0" may follow
                past_end_marker = true;
                continue;
            }
            if (past_end_marker) {
                if (token == "0") continue;
                throw ParseError(line_no, "content after '%' end marker");
            }
            if (declared_vars < 0)
                throw ParseError(line_no, "clause data before the problem line");
            long long lit = 0;
            try {
                std::size_t consumed = 0;
                lit = std::stoll(token, &consumed);
                if (consumed != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected literal, got '" + token + "'");
            }
            if (lit == 0) {
                if (current.empty()) throw ParseError(line_no, "empty clause");
                if (static_cast<long long>(clauses.size()) == declared_clauses)
                    throw ParseError(line_no, "more clauses than declared");
                clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (std::llabs(lit) > declared_vars)
                    throw ParseError(line_no, "literal " + std::to_string(lit) +
                                                  " out of range [1, " +
                                                  std::to_string(declared_vars) + "]");
                current.push_back(static_cast<std::int32_t>(lit));
            }
        } while (fields >> token);
    }

    const std::size_t end_line = line_no == 0 ? 1 : line_no;
    if (declared_vars < 0) throw ParseError(end_line, "missing problem line");
    if (!current.empty()) throw ParseError(end_line, "unterminated clause");
    if (static_cast<long long>(clauses.size()) != declared_clauses)
        throw ParseError(end_line, "clause count mismatch: declared " +
                                       std::to_string(declared_clauses) + ", found " +
                                       std::to_string(clauses.size()));
    return CnfFormula(static_cast<std::uint32_t>(declared_vars), clauses);
}

void save_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (std::size_t c = 0; c < f.num_clauses(); ++c) {
        for (const std::int32_t lit : f.clause(c)) out << lit << ' ';
        out << "0\n";
    }
}

namespace {

std::vector<std::int32_t> random_clause(std::uint32_t num_vars, Rng& rng) {
    std::vector<std::int32_t> clause;
    while (clause.size() < 3) {
        const auto var = static_cast<std::int32_t>(1 + uniform_index(rng, num_vars));
        bool duplicate = false;
        for (const std::int32_t lit : clause)
            if (std::abs(lit) == var) duplicate = true;
        if (duplicate) continue;
        clause.push_back(chance(rng, 0.5) ? var : -var);
    }
    return clause;
}

}  // namespace

CnfFormula random_3cnf(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng) {
    if (num_vars < 3) throw std::invalid_argument("need at least 3 variables");
    std::vector<std::vector<std::int32_t>> clauses;
    clauses.reserve(num_clauses);
    for (std::size_t c = 0; c < num_clauses; ++c) clauses.push_back(random_clause(num_vars, rng));
    return CnfFormula(num_vars, clauses);
}

CnfFormula random_satisfiable_3cnf(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng) {
    if (num_vars < 3) throw std::invalid_argument("need at least 3 variables");
    std::vector<std::uint8_t> planted(num_vars);
    for (auto& bit : planted) bit = chance(rng, 0.5) ? 1 : 0;

    std::vector<std::vector<std::int32_t>> clauses;
    clauses.reserve(num_clauses);
    while (clauses.size() < num_clauses) {
        auto clause = random_clause(num_vars, rng);
        bool satisfied = false;
        for (const std::int32_t lit : clause) {
            const bool value = planted[static_cast<std::size_t>(std::abs(lit)) - 1] != 0;
            if (lit > 0 ? value : !value) satisfied = true;
        }
        if (satisfied) clauses.push_back(std::move(clause));
    }
    return CnfFormula(num_vars, clauses);
}

}  // namespace fuss
