#pragma once

// Internal parsing/formatting support shared by the instance-file readers.

#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "fuss/parse_error.hpp"

namespace fuss::detail {

/// Whitespace tokenizer over an istream that tracks 1-based line numbers so
/// parse errors can name the offending line.
class TokenReader {
  public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    /// Next whitespace-separated token, or nullopt at end of input.
    std::optional<std::string_view> next() {
        while (pos_ >= line_buf_.size()) {
            if (!std::getline(in_, line_buf_)) return std::nullopt;
            ++line_;
            pos_ = 0;
        }
        while (pos_ < line_buf_.size() && is_space(line_buf_[pos_])) ++pos_;
        if (pos_ >= line_buf_.size()) return next();
        const std::size_t start = pos_;
        while (pos_ < line_buf_.size() && !is_space(line_buf_[pos_])) ++pos_;
        return std::string_view(line_buf_).substr(start, pos_ - start);
    }

    /// Line of the most recently returned token (or of the read position).
    std::size_t line() const { return line_ == 0 ? 1 : line_; }

    long long next_int(const char* what) {
        const auto token = require(what);
        long long value = 0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            throw ParseError(line(), std::string("expected integer for ") + what + ", got '" +
                                         std::string(token) + "'");
        return value;
    }

    double next_double(const char* what) {
        const auto token = require(what);
        double value = 0.0;
        const auto* begin = token.data();
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            throw ParseError(line(), std::string("expected number for ") + what + ", got '" +
                                         std::string(token) + "'");
        return value;
    }

    std::string_view require(const char* what) {
        auto token = next();
        if (!token)
            throw ParseError(line(), std::string("unexpected end of input, expected ") + what);
        return *token;
    }

    bool at_end() {
        auto token = next();
        if (!token) return true;
        pos_ -= token->size();  // push back within the current line
        return false;
    }

  private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }

    std::istream& in_;
    std::string line_buf_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

/// Shortest round-trip decimal form; keeps serialized files byte-stable.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace fuss::detail
