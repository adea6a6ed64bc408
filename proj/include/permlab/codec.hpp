#pragma once

// Text encodings shared by every front end:
//   one-line form: integers separated by whitespace and/or commas, "3 8 2 5" or "3,8,2,5"
//   cycle form:    parenthesized groups, "(1 6 8 2 10)(3 12 9 11 7 5 4)"

#include "permlab/cycles.hpp"
#include "permlab/word.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

namespace detail {

inline bool is_separator(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; }

inline std::vector<Letter> parse_integers(std::string_view text)
{
    std::vector<Letter> out;
    std::size_t k = 0;
    while (k < text.size()) {
        if (is_separator(text[k])) {
            ++k;
            continue;
        }
        Letter value = 0;
        const auto* first = text.data() + k;
        const auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || (ptr != last && !is_separator(*ptr))) {
            throw DomainError("cannot parse integer near \"" + std::string(text.substr(k, 8)) + "\"");
        }
        out.push_back(value);
        k = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

} // namespace detail

inline Word parse_word(std::string_view text) { return Word(detail::parse_integers(text)); }

inline OneLinePermutation parse_one_line(std::string_view text)
{
    return OneLinePermutation(detail::parse_integers(text));
}

/// Parses cycle form. Every letter of {1, ..., n} must appear, fixed points included.
inline CycleDecomposition parse_cycles(std::string_view text)
{
    std::vector<std::vector<Letter>> raw;
    std::size_t k = 0;
    while (k < text.size()) {
        const char ch = text[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++k;
            continue;
        }
        if (ch != '(') {
            throw DomainError("cycle form: expected '(' at offset " + std::to_string(k));
        }
        const auto close = text.find(')', k);
        if (close == std::string_view::npos) {
            throw DomainError("cycle form: unbalanced '('");
        }
        auto body = text.substr(k + 1, close - k - 1);
        if (body.find('(') != std::string_view::npos) {
            throw DomainError("cycle form: nested '('");
        }
        auto letters = detail::parse_integers(body);
        if (letters.empty()) {
            throw DomainError("cycle form: empty cycle");
        }
        raw.push_back(std::move(letters));
        k = close + 1;
    }
    if (raw.empty()) {
        throw DomainError("cycle form: no cycles");
    }
    return canonicalize_cycles(std::move(raw));
}

inline std::string format_word(Letters w)
{
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) {
            out += ' ';
        }
        out += std::to_string(w[k]);
    }
    return out;
}

inline std::string format_cycles(const CycleDecomposition& p)
{
    std::string out;
    for (const auto& c : p) {
        out += '(';
        out += format_word(c);
        out += ')';
    }
    return out;
}

} // namespace permlab
