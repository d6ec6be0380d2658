#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "mesa/error.hpp"

namespace mesa {

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        int v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
            throw ParseError(std::string("invalid ") + what + " entry '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// "31324421" (one digit per letter) or "10,10,1,1,..." when values exceed 9.
inline std::vector<int> parse_word(std::string_view text) {
    if (text.find(',') != std::string_view::npos) return detail::parse_int_list(text, "word");
    std::vector<int> out;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ParseError(std::string("invalid character '") + c + "' in word");
        out.push_back(c - '0');
    }
    return out;
}

// "3,4,5"; "", "{}" and "-" denote the empty set. Braces are tolerated.
inline std::vector<int> parse_set(std::string_view text) {
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    if (text.empty() || text == "-") return {};
    return detail::parse_int_list(text, "set");
}

} // namespace mesa
