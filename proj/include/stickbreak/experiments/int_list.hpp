#pragma once

/**
 * @file int_list.hpp
 * @brief Integer lists as written on the command line.
 *
 * Comma-separated items, each one of
 *   7          a single value
 *   2..10      inclusive range
 *   2..1024:2  range with step
 *   2..1024*2  geometric range (2, 4, 8, ..., 1024)
 * The result is sorted and free of duplicates.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stickbreak::experiments {

namespace detail {

inline std::uint64_t parse_list_integer(std::string_view s, std::string_view whole) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("integer list: malformed item in '" + std::string(whole) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        if (v > (UINT64_MAX - 9) / 10) throw std::invalid_argument("integer list: value too large");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

} // namespace detail

inline std::vector<std::uint64_t> parse_int_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = text.substr(start, comma - start);
        start = comma + 1;
        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(detail::parse_list_integer(item, text));
            continue;
        }
        const std::uint64_t lo = detail::parse_list_integer(item.substr(0, dots), text);
        std::string_view rest = item.substr(dots + 2);
        std::uint64_t step = 1;
        bool geometric = false;
        if (auto k = rest.find_first_of(":*"); k != std::string_view::npos) {
            geometric = rest[k] == '*';
            step = detail::parse_list_integer(rest.substr(k + 1), text);
            rest = rest.substr(0, k);
        }
        const std::uint64_t hi = detail::parse_list_integer(rest, text);
        if (lo > hi) throw std::invalid_argument("integer list: empty range in '" + std::string(text) + "'");
        if (geometric) {
            if (lo == 0 || step < 2) throw std::invalid_argument("integer list: geometric range needs lo >= 1, factor >= 2");
            for (std::uint64_t v = lo; v <= hi; v *= step) {
                out.push_back(v);
                if (v > hi / step) break;
            }
        } else {
            if (step == 0) throw std::invalid_argument("integer list: step must be >= 1");
            for (std::uint64_t v = lo; v <= hi; v += step) {
                out.push_back(v);
                if (hi - v < step) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace stickbreak::experiments
