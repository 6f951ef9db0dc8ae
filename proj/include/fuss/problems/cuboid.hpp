#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "fuss/rng.hpp"

namespace fuss {

using Point4 = std::array<double, 4>;

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

struct Box4 {
    std::array<Interval, 4> dims;
    bool contains(const Point4& p) const {
        for (std::size_t d = 0; d < 4; ++d)
            if (!dims[d].contains(p[d])) return false;
        return true;
    }
};

inline constexpr std::size_t kCuboidCount = 16;
inline constexpr double kMinCuboidWidth = 0.2;

/// A sum-of-box-indicators function over [0,1]^4 with its precomputed global
/// maximum and a witness point attaining it.
struct CuboidFunctionSpec {
    std::vector<Box4> cuboids;
    int true_maximum = 0;
    Point4 argmax_witness{};
};

/// Number of cuboids containing p (closed intervals).
int cuboid_fitness(const Point4& p, const CuboidFunctionSpec& spec);

/// Exact maximum of the indicator sum over [0,1]^4 and a point attaining it.
/// Sweeps the arrangement induced by the interval endpoints per dimension;
/// grid points count as degenerate cells, so maxima attained only where box
/// boundaries touch are found too. Supports up to 32 cuboids.
std::pair<int, Point4> cuboid_true_maximum(const std::vector<Box4>& cuboids);

/// 16 random cuboids, each dimension an interval of width uniform in
/// [0.2, 1) positioned uniformly inside [0,1]; maximum precomputed exactly.
CuboidFunctionSpec cuboid_function_generate(Rng& rng);

/// Plain-text form: 16 lines of "lo hi lo hi lo hi lo hi".
void save_cuboid_spec(std::ostream& out, const CuboidFunctionSpec& spec);

/// Reads the 16-line form and recomputes the maximum. Throws ParseError on
/// malformed input (line numbered).
CuboidFunctionSpec load_cuboid_spec(std::istream& in);

/// Replace one coordinate (chosen uniformly) with a fresh uniform draw.
Point4 hypercube_mutate(const Point4& p, Rng& rng);

/// Take each coordinate from either parent with probability 1/2.
Point4 hypercube_crossover(const Point4& p, const Point4& q, Rng& rng);

class CuboidProblem {
  public:
    using Genome = Point4;

    explicit CuboidProblem(CuboidFunctionSpec spec) : spec_(std::move(spec)) {}

    Genome random_genome(Rng& rng) const {
        return {uniform_unit(rng), uniform_unit(rng), uniform_unit(rng), uniform_unit(rng)};
    }
    double fitness(const Genome& g) const { return static_cast<double>(cuboid_fitness(g, spec_)); }
    Genome mutate(const Genome& g, Rng& rng) const { return hypercube_mutate(g, rng); }
    Genome crossover(const Genome& a, const Genome& b, Rng& rng) const {
        return hypercube_crossover(a, b, rng);
    }
    bool integer_fitness() const { return true; }
    bool minimizing() const { return false; }

    double optimum() const { return static_cast<double>(spec_.true_maximum); }
    const CuboidFunctionSpec& spec() const { return spec_; }

  private:
    CuboidFunctionSpec spec_;
};

}  // namespace fuss
