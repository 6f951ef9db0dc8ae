#include "fuss/diversity.hpp"

#include <cassert>

namespace fuss {

int hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    int distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i) distance += (a[i] != b[i]) ? 1 : 0;
    return distance;
}

std::optional<double> mean_pairwise_diversity(
    const std::vector<std::span<const std::uint8_t>>& genomes, std::size_t sample_cap, Rng& rng) {
    if (genomes.size() < 2 || sample_cap < 2) return std::nullopt;

    std::vector<std::span<const std::uint8_t>> sample;
    if (genomes.size() > sample_cap) {
        // Partial Fisher-Yates over an index array keeps the subsample uniform
        // without replacement.
        std::vector<std::size_t> idx(genomes.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < sample_cap; ++i)
            std::swap(idx[i], idx[i + uniform_index(rng, idx.size() - i)]);
        sample.reserve(sample_cap);
        for (std::size_t i = 0; i < sample_cap; ++i) sample.push_back(genomes[idx[i]]);
    } else {
        sample = genomes;
    }

    const std::size_t length = sample.front().size();
    if (length == 0) return std::nullopt;

    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            total += static_cast<double>(hamming_distance(sample[i], sample[j]));
            ++pairs;
        }
    }
    return total / static_cast<double>(length) / static_cast<double>(pairs);
}

}  // namespace fuss
