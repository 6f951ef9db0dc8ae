#include "fuss/problems/tsp.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fuss/parse_error.hpp"
#include "text_io.hpp"

namespace fuss {

double tour_length(const Tour& tour, const TspInstance& inst) {
    assert(tour.size() == inst.n);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i)
        total += inst.distance(tour[i], tour[i + 1]);
    total += inst.distance(tour.back(), tour.front());
    return total;
}

Tour swap_mutate(const Tour& tour, Rng& rng) {
    assert(tour.size() >= 2);
    Tour out = tour;
    const std::size_t i = uniform_index(rng, out.size());
    std::size_t j = uniform_index(rng, out.size() - 1);
    if (j >= i) ++j;
    std::swap(out[i], out[j]);
    return out;
}

Tour pmx_crossover_with_cuts(const Tour& first, const Tour& second, std::size_t cut1,
                             std::size_t cut2) {
    assert(first.size() == second.size());
    const std::size_t n = first.size();
    assert(cut1 <= cut2 && cut2 <= n);

    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    Tour child(n, kUnset);
    // City -> its position inside the copied segment, or kUnset.
    std::vector<std::uint32_t> segment_pos(n, kUnset);
    for (std::size_t i = cut1; i < cut2; ++i) {
        child[i] = first[i];
        segment_pos[first[i]] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= cut1 && i < cut2) continue;
        std::uint32_t city = second[i];
        while (segment_pos[city] != kUnset) city = second[segment_pos[city]];
        child[i] = city;
    }
    return child;
}

Tour pmx_crossover(const Tour& first, const Tour& second, Rng& rng) {
    const std::size_t n = first.size();
    std::size_t cut1 = uniform_index(rng, n + 1);
    std::size_t cut2 = uniform_index(rng, n + 1);
    if (cut1 > cut2) std::swap(cut1, cut2);
    return pmx_crossover_with_cuts(first, second, cut1, cut2);
}

TspInstance random_tsp_instance(std::size_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("a TSP instance needs at least 2 cities");
    TspInstance inst;
    inst.n = n;
    inst.source = TspInstance::Source::RandomMatrix;
    inst.dist.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = uniform_unit(rng);
            inst.dist[i * n + j] = d;
            inst.dist[j * n + i] = d;
        }
    }
    return inst;
}

namespace {

TspInstance from_coordinates(std::vector<std::array<double, 2>> coords) {
    TspInstance inst;
    inst.n = coords.size();
    inst.source = TspInstance::Source::Coordinates;
    inst.coords = std::move(coords);
    inst.dist.assign(inst.n * inst.n, 0.0);
    for (std::size_t i = 0; i < inst.n; ++i) {
        for (std::size_t j = i + 1; j < inst.n; ++j) {
            const double dx = inst.coords[i][0] - inst.coords[j][0];
            const double dy = inst.coords[i][1] - inst.coords[j][1];
            const double d = std::hypot(dx, dy);
            inst.dist[i * inst.n + j] = d;
            inst.dist[j * inst.n + i] = d;
        }
    }
    return inst;
}

}  // namespace

TspInstance load_tsp_coordinates(std::istream& in) {
    std::vector<std::array<double, 2>> coords;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        if (start == line.size()) continue;
        if (std::isalpha(static_cast<unsigned char>(line[start]))) continue;  // header line

        std::istringstream fields(line);
        long long id = 0;
        double x = 0.0, y = 0.0;
        if (!(fields >> id >> x >> y))
            throw ParseError(line_no, "expected 'id x y', got '" + line + "'");
        std::string extra;
        if (fields >> extra)
            throw ParseError(line_no, "unexpected trailing field '" + extra + "'");
        coords.push_back({x, y});
    }
    if (coords.size() < 2) throw ParseError(line_no == 0 ? 1 : line_no, "fewer than 2 cities");
    return from_coordinates(std::move(coords));
}

void save_tsp_coordinates(std::ostream& out, const TspInstance& inst) {
    for (std::size_t i = 0; i < inst.coords.size(); ++i)
        out << (i + 1) << ' ' << detail::format_double(inst.coords[i][0]) << ' '
            << detail::format_double(inst.coords[i][1]) << '\n';
}

TspInstance load_tsp_matrix(std::istream& in) {
    detail::TokenReader reader(in);
    const long long n = reader.next_int("city count");
    if (n < 2) throw ParseError(reader.line(), "fewer than 2 cities");
    TspInstance inst;
    inst.n = static_cast<std::size_t>(n);
    inst.source = TspInstance::Source::RandomMatrix;
    inst.dist.assign(inst.n * inst.n, 0.0);
    for (std::size_t i = 0; i + 1 < inst.n; ++i) {
        for (std::size_t j = i + 1; j < inst.n; ++j) {
            const double d = reader.next_double("distance");
            if (d < 0.0) throw ParseError(reader.line(), "negative distance");
            inst.dist[i * inst.n + j] = d;
            inst.dist[j * inst.n + i] = d;
        }
    }
    if (!reader.at_end()) throw ParseError(reader.line(), "trailing content after the matrix");
    return inst;
}

void save_tsp_matrix(std::ostream& out, const TspInstance& inst) {
    out << inst.n << '\n';
    for (std::size_t i = 0; i + 1 < inst.n; ++i) {
        for (std::size_t j = i + 1; j < inst.n; ++j) {
            if (j > i + 1) out << ' ';
            out << detail::format_double(inst.dist[i * inst.n + j]);
        }
        out << '\n';
    }
}

Tour TspProblem::random_genome(Rng& rng) const {
    Tour tour(inst_.n);
    std::iota(tour.begin(), tour.end(), 0u);
    std::shuffle(tour.begin(), tour.end(), rng);
    return tour;
}

}  // namespace fuss
