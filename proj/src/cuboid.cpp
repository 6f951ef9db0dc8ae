#include "fuss/problems/cuboid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fuss/parse_error.hpp"
#include "text_io.hpp"

namespace fuss {

int cuboid_fitness(const Point4& p, const CuboidFunctionSpec& spec) {
    int count = 0;
    for (const auto& box : spec.cuboids)
        if (box.contains(p)) ++count;
    return count;
}

namespace {

// 1D arrangement cells for one dimension: every endpoint value inside [0,1]
// plus the midpoint of every gap between consecutive values.
std::vector<double> cell_coordinates(const std::vector<Box4>& cuboids, std::size_t dim) {
    std::vector<double> values{0.0, 1.0};
    for (const auto& box : cuboids) {
        if (box.dims[dim].lo > 0.0 && box.dims[dim].lo < 1.0) values.push_back(box.dims[dim].lo);
        if (box.dims[dim].hi > 0.0 && box.dims[dim].hi < 1.0) values.push_back(box.dims[dim].hi);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> cells;
    cells.reserve(values.size() * 2 - 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        cells.push_back(values[i]);
        if (i + 1 < values.size()) cells.push_back((values[i] + values[i + 1]) / 2.0);
    }
    return cells;
}

std::vector<std::uint32_t> membership_masks(const std::vector<Box4>& cuboids, std::size_t dim,
                                            const std::vector<double>& cells) {
    std::vector<std::uint32_t> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t b = 0; b < cuboids.size(); ++b)
            if (cuboids[b].dims[dim].contains(cells[c])) masks[c] |= 1u << b;
    return masks;
}

}  // namespace

std::pair<int, Point4> cuboid_true_maximum(const std::vector<Box4>& cuboids) {
    if (cuboids.empty()) throw std::invalid_argument("no cuboids");
    if (cuboids.size() > 32) throw std::invalid_argument("more than 32 cuboids unsupported");

    std::array<std::vector<double>, 4> cells;
    std::array<std::vector<std::uint32_t>, 4> masks;
    for (std::size_t d = 0; d < 4; ++d) {
        cells[d] = cell_coordinates(cuboids, d);
        masks[d] = membership_masks(cuboids, d, cells[d]);
    }

    int best = -1;
    std::array<std::size_t, 4> best_cell{};
    for (std::size_t i = 0; i < masks[0].size(); ++i) {
        for (std::size_t j = 0; j < masks[1].size(); ++j) {
            const std::uint32_t ij = masks[0][i] & masks[1][j];
            for (std::size_t k = 0; k < masks[2].size(); ++k) {
                const std::uint32_t ijk = ij & masks[2][k];
                if (std::popcount(ijk) <= best) continue;
                for (std::size_t l = 0; l < masks[3].size(); ++l) {
                    const int count = std::popcount(ijk & masks[3][l]);
                    if (count > best) {
                        best = count;
                        best_cell = {i, j, k, l};
                    }
                }
            }
        }
    }
    const Point4 witness{cells[0][best_cell[0]], cells[1][best_cell[1]], cells[2][best_cell[2]],
                         cells[3][best_cell[3]]};
    return {best, witness};
}

CuboidFunctionSpec cuboid_function_generate(Rng& rng) {
    CuboidFunctionSpec spec;
    spec.cuboids.reserve(kCuboidCount);
    for (std::size_t i = 0; i < kCuboidCount; ++i) {
        Box4 box;
        for (std::size_t d = 0; d < 4; ++d) {
            const double width = uniform_real(rng, kMinCuboidWidth, 1.0);
            const double lo = uniform_real(rng, 0.0, 1.0 - width);
            box.dims[d] = {lo, lo + width};
        }
        spec.cuboids.push_back(box);
    }
    const auto [max, witness] = cuboid_true_maximum(spec.cuboids);
    spec.true_maximum = max;
    spec.argmax_witness = witness;
    return spec;
}

void save_cuboid_spec(std::ostream& out, const CuboidFunctionSpec& spec) {
    for (const auto& box : spec.cuboids) {
        for (std::size_t d = 0; d < 4; ++d) {
            if (d > 0) out << ' ';
            out << detail::format_double(box.dims[d].lo) << ' '
                << detail::format_double(box.dims[d].hi);
        }
        out << '\n';
    }
}

CuboidFunctionSpec load_cuboid_spec(std::istream& in) {
    constexpr double kWidthSlack = 1e-9;
    detail::TokenReader reader(in);
    CuboidFunctionSpec spec;
    for (std::size_t i = 0; i < kCuboidCount; ++i) {
        Box4 box;
        for (std::size_t d = 0; d < 4; ++d) {
            const double lo = reader.next_double("interval low edge");
            const double hi = reader.next_double("interval high edge");
            if (lo < -kWidthSlack || hi > 1.0 + kWidthSlack || lo > hi)
                throw ParseError(reader.line(), "interval outside the unit cube");
            const double width = hi - lo;
            if (width < kMinCuboidWidth - kWidthSlack || width > 1.0 + kWidthSlack)
                throw ParseError(reader.line(), "interval width outside [0.2, 1]");
            box.dims[d] = {lo, hi};
        }
        spec.cuboids.push_back(box);
    }
    if (!reader.at_end()) throw ParseError(reader.line(), "trailing content after 16 cuboids");
    const auto [max, witness] = cuboid_true_maximum(spec.cuboids);
    spec.true_maximum = max;
    spec.argmax_witness = witness;
    return spec;
}

Point4 hypercube_mutate(const Point4& p, Rng& rng) {
    Point4 out = p;
    out[uniform_index(rng, 4)] = uniform_unit(rng);
    return out;
}

Point4 hypercube_crossover(const Point4& p, const Point4& q, Rng& rng) {
    Point4 out;
    for (std::size_t d = 0; d < 4; ++d) out[d] = chance(rng, 0.5) ? p[d] : q[d];
    return out;
}

}  // namespace fuss
