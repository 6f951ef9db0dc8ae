#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fuss/rng.hpp"

namespace fuss {

template <typename G>
struct Individual {
    G genome;
    double fitness = 0.0;
};

/// Multiset of individuals with an index by fitness value.
///
/// Member slots are stable only between mutations: erase() moves the last
/// member into the freed slot, so callers must not hold slot indices across
/// an insert/erase. Fitness is engine-internal (maximization orientation).
///
/// The index supports the queries the selection schemes need in O(log n):
/// min/max fitness, uniform member, uniform member within an exact fitness
/// value, and nearest-fitness lookup with exact tie sets.
template <typename G>
class Population {
  public:
    using Genome = G;

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    const Individual<G>& operator[](std::size_t slot) const { return members_[slot].ind; }

    double min_fitness() const {
        assert(!empty());
        return levels_.begin()->first;
    }
    double max_fitness() const {
        assert(!empty());
        return levels_.rbegin()->first;
    }

    std::size_t insert(Individual<G> ind) {
        const std::size_t slot = members_.size();
        auto& bucket = levels_[ind.fitness];
        bucket.push_back(static_cast<std::uint32_t>(slot));
        members_.push_back(Entry{std::move(ind), bucket.size() - 1});
        return slot;
    }

    void erase(std::size_t slot) {
        assert(slot < members_.size());
        remove_from_level(slot);
        const std::size_t last = members_.size() - 1;
        if (slot != last) {
            members_[slot] = std::move(members_[last]);
            auto it = levels_.find(members_[slot].ind.fitness);
            it->second[members_[slot].pos_in_level] = static_cast<std::uint32_t>(slot);
        }
        members_.pop_back();
    }

    /// Number of members whose fitness equals `fitness` exactly.
    std::size_t count_at(double fitness) const {
        auto it = levels_.find(fitness);
        return it == levels_.end() ? 0 : it->second.size();
    }

    /// Occupied fitness values with their member counts, in increasing order.
    std::vector<std::pair<double, std::size_t>> level_counts() const {
        std::vector<std::pair<double, std::size_t>> out;
        out.reserve(levels_.size());
        for (const auto& [fitness, bucket] : levels_) out.emplace_back(fitness, bucket.size());
        return out;
    }

    /// Smallest occupied fitness value >= x, if any.
    std::optional<double> lowest_level_at_least(double x) const {
        auto it = levels_.lower_bound(x);
        if (it == levels_.end()) return std::nullopt;
        return it->first;
    }

    /// Largest occupied fitness value <= x, if any.
    std::optional<double> highest_level_at_most(double x) const {
        auto it = levels_.upper_bound(x);
        if (it == levels_.begin()) return std::nullopt;
        return std::prev(it)->first;
    }

    /// Occupied fitness value(s) nearest to `target`: a single value, or two
    /// values exactly equidistant from it.
    struct NearestLevels {
        double primary;
        std::optional<double> tied;
    };

    NearestLevels nearest_levels(double target) const {
        assert(!empty());
        auto hi = levels_.lower_bound(target);
        if (hi != levels_.end() && hi->first == target) return {target, std::nullopt};
        if (hi == levels_.begin()) return {hi->first, std::nullopt};
        if (hi == levels_.end()) return {std::prev(hi)->first, std::nullopt};
        auto lo = std::prev(hi);
        const double d_lo = target - lo->first;
        const double d_hi = hi->first - target;
        if (d_lo < d_hi) return {lo->first, std::nullopt};
        if (d_hi < d_lo) return {hi->first, std::nullopt};
        return {lo->first, hi->first};
    }

    /// Uniform over all member slots.
    std::size_t sample_member(Rng& rng) const {
        assert(!empty());
        return uniform_index(rng, members_.size());
    }

    /// Uniform over members whose fitness equals `fitness` exactly.
    std::size_t sample_at(double fitness, Rng& rng) const {
        auto it = levels_.find(fitness);
        assert(it != levels_.end());
        const auto& bucket = it->second;
        return bucket[uniform_index(rng, bucket.size())];
    }

    /// Uniform over the members nearest `target` in fitness. When two fitness
    /// values tie in distance, all their members form one tie set.
    std::size_t sample_nearest(double target, Rng& rng) const {
        const NearestLevels near = nearest_levels(target);
        if (!near.tied) return sample_at(near.primary, rng);
        const auto& a = levels_.find(near.primary)->second;
        const auto& b = levels_.find(*near.tied)->second;
        const std::size_t k = uniform_index(rng, a.size() + b.size());
        return k < a.size() ? a[k] : b[k - a.size()];
    }

    /// Cross-checks the fitness index against the member array. Test support.
    bool index_consistent() const {
        std::size_t indexed = 0;
        for (const auto& [fitness, bucket] : levels_) {
            if (bucket.empty()) return false;
            indexed += bucket.size();
            for (std::size_t pos = 0; pos < bucket.size(); ++pos) {
                const std::size_t slot = bucket[pos];
                if (slot >= members_.size()) return false;
                if (members_[slot].ind.fitness != fitness) return false;
                if (members_[slot].pos_in_level != pos) return false;
            }
        }
        return indexed == members_.size();
    }

  private:
    struct Entry {
        Individual<G> ind;
        std::size_t pos_in_level = 0;
    };

    void remove_from_level(std::size_t slot) {
        auto it = levels_.find(members_[slot].ind.fitness);
        assert(it != levels_.end());
        auto& bucket = it->second;
        const std::size_t pos = members_[slot].pos_in_level;
        const std::uint32_t moved = bucket.back();
        bucket[pos] = moved;
        members_[moved].pos_in_level = pos;
        bucket.pop_back();
        if (bucket.empty()) levels_.erase(it);
    }

    std::vector<Entry> members_;
    std::map<double, std::vector<std::uint32_t>> levels_;
};

}  // namespace fuss
