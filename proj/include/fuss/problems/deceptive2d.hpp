#pragma once

#include <stdexcept>

#include "fuss/rng.hpp"

namespace fuss {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Two orthogonal strips in the unit square. The intersection is the global
/// optimum; the region outside both strips is a broad local optimum, so the
/// only path to the top leads through the lower-fitness strips.
struct Deceptive2dSpec {
    double a = 0.45;
    double b = 0.45;
    double delta = 0.1;

    void validate() const {
        if (!(delta > 0.0 && delta <= 1.0))
            throw std::invalid_argument("delta must be in (0,1]");
        if (a < 0.0 || b < 0.0 || a + delta > 1.0 || b + delta > 1.0)
            throw std::invalid_argument("strips must lie inside the unit square");
    }
};

/// 1 in the vertical strip only, 2 in the horizontal strip only, 3 outside
/// both, 4 in the intersection. Strip membership uses closed intervals.
inline int deceptive2d_fitness(const Point2& p, const Deceptive2dSpec& s) {
    const bool in1 = p.x >= s.a && p.x <= s.a + s.delta;
    const bool in2 = p.y >= s.b && p.y <= s.b + s.delta;
    if (in1 && in2) return 4;
    if (in1) return 1;
    if (in2) return 2;
    return 3;
}

/// Replace x or y (fair coin) with a fresh uniform draw.
inline Point2 deceptive2d_mutate(const Point2& p, Rng& rng) {
    Point2 out = p;
    if (chance(rng, 0.5))
        out.x = uniform_unit(rng);
    else
        out.y = uniform_unit(rng);
    return out;
}

inline Point2 deceptive2d_crossover(const Point2& p, const Point2& q) { return {p.x, q.y}; }

class Deceptive2dProblem {
  public:
    using Genome = Point2;

    static constexpr double kOptimum = 4.0;

    explicit Deceptive2dProblem(Deceptive2dSpec spec = {}) : spec_(spec) { spec_.validate(); }

    Genome random_genome(Rng& rng) const { return {uniform_unit(rng), uniform_unit(rng)}; }
    double fitness(const Genome& g) const {
        return static_cast<double>(deceptive2d_fitness(g, spec_));
    }
    Genome mutate(const Genome& g, Rng& rng) const { return deceptive2d_mutate(g, rng); }
    Genome crossover(const Genome& a, const Genome& b, Rng&) const {
        return deceptive2d_crossover(a, b);
    }
    bool integer_fitness() const { return true; }
    bool minimizing() const { return false; }

    const Deceptive2dSpec& spec() const { return spec_; }

  private:
    Deceptive2dSpec spec_;
};

}  // namespace fuss
