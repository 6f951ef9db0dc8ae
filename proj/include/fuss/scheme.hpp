#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fuss {

/// Fitness uniform selection over the continuous range [f_min, f_max].
struct FussReal {};

/// Fitness uniform selection over integer fitness levels {f_min..f_max}.
/// Requires a problem that declares integer fitness.
struct FussInteger {};

/// Pick `size` members uniformly with replacement, keep the fittest.
struct Tournament {
    std::size_t size = 2;
};

/// Uniform selection; the random-search baseline.
struct RandomSearch {};

using SelectionScheme = std::variant<FussReal, FussInteger, Tournament, RandomSearch>;

/// Flag spelling used by the CLI and in output files:
/// fuss | fussint | tour<k> | rand
std::string scheme_name(const SelectionScheme& scheme);
std::optional<SelectionScheme> parse_scheme(std::string_view name);

bool needs_integer_fitness(const SelectionScheme& scheme);

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

}  // namespace fuss
