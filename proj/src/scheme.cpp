#include "fuss/scheme.hpp"

#include <charconv>

namespace fuss {

std::string scheme_name(const SelectionScheme& scheme) {
    return std::visit(detail::overloaded{
                          [](FussReal) { return std::string("fuss"); },
                          [](FussInteger) { return std::string("fussint"); },
                          [](const Tournament& t) { return "tour" + std::to_string(t.size); },
                          [](RandomSearch) { return std::string("rand"); },
                      },
                      scheme);
}

std::optional<SelectionScheme> parse_scheme(std::string_view name) {
    if (name == "fuss") return SelectionScheme{FussReal{}};
    if (name == "fussint") return SelectionScheme{FussInteger{}};
    if (name == "rand") return SelectionScheme{RandomSearch{}};
    if (name.starts_with("tour")) {
        const std::string_view digits = name.substr(4);
        std::size_t size = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && size >= 1)
            return SelectionScheme{Tournament{size}};
    }
    return std::nullopt;
}

bool needs_integer_fitness(const SelectionScheme& scheme) {
    return std::holds_alternative<FussInteger>(scheme);
}

}  // namespace fuss
