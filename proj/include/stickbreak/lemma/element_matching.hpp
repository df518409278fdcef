#pragma once

/**
 * @file element_matching.hpp
 * @brief Matching of j consecutive elements onto the first j elements.
 *
 * At level t the elements are the canonical intervals s = 0 .. 2^t - 1.
 * The sources are elements g .. g+j-1 and the targets 0 .. j-1; every
 * target must be cut no later than its source.
 *
 * Construction, by induction on t: element 2u (even) and element 2u+1 (odd)
 * both behave like element u one level up. Sources and targets are split by
 * parity and each half is matched recursively. If the targets hold one more
 * even element than the sources (g and j both odd), the odd sources are
 * matched to the odd elements 1, 3, .., j, one past the targets, and the
 * source sent to element j is moved to element j-1.
 */

#include "../errors.hpp"
#include "report.hpp"
#include "split_order.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stickbreak::lemma {

struct ElementMatching {
    unsigned level = 0;
    std::uint64_t g = 0;  // sources: elements g .. g+j-1
    std::uint64_t j = 0;  // targets: elements 0 .. j-1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (source, target), sources ascending
};

namespace detail {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> match(unsigned t, std::uint64_t g, std::uint64_t j) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (j == 0) return out;
    if (t == 0) return {{0, 0}};
    const std::uint64_t evens = (g % 2 == 0) ? (j + 1) / 2 : j / 2;  // even sources
    const std::uint64_t odds = j - evens;
    const std::uint64_t g_even = (g + 1) / 2;  // first even source is 2*g_even
    const std::uint64_t g_odd = g / 2;         // first odd source is 2*g_odd+1
    for (auto [u, v] : match(t - 1, g_even, evens)) out.emplace_back(2 * u, 2 * v);
    for (auto [u, v] : match(t - 1, g_odd, odds)) out.emplace_back(2 * u + 1, 2 * v + 1);
    if (evens != (j + 1) / 2) {
        // targets have one extra even; odd targets ran to element j
        for (auto& pr : out)
            if (pr.second == j) pr.second = j - 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline ElementMatching build_element_matching(unsigned t, std::uint64_t g, std::uint64_t j) {
    if (t > 40) throw InvalidRange("build_element_matching: level above 40");
    const std::uint64_t elements = std::uint64_t{1} << t;
    if (g >= elements || j > elements - g)
        throw InvalidRange("build_element_matching: need g + j <= 2^t (t=" + std::to_string(t) +
                           ", g=" + std::to_string(g) + ", j=" + std::to_string(j) + ")");
    return {t, g, j, detail::match(t, g, j)};
}

/// Bijective onto the targets, sources exactly g .. g+j-1, split order kept.
inline bool matching_is_valid(const ElementMatching& M, std::string* why = nullptr) {
    auto reject = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (M.pairs.size() != M.j) return reject("pair count differs from j");
    std::vector<bool> hit(M.j, false);
    for (std::size_t k = 0; k < M.pairs.size(); ++k) {
        auto [s, d] = M.pairs[k];
        if (s != M.g + k) return reject("sources are not g .. g+j-1");
        if (d >= M.j || hit[d]) return reject("targets are not a bijection onto 0 .. j-1");
        hit[d] = true;
        if (split_index({M.level, d}) > split_index({M.level, s}))
            return reject("target " + std::to_string(d) + " is cut after source " + std::to_string(s));
    }
    return true;
}

/// All g, j <= limit with g + j <= 2^t, for t = 0 .. t_max.
inline VerificationReport verify_matchings(unsigned t_max, std::uint64_t limit = 32) {
    VerificationReport rep{"element-matching",
                           "0 <= t <= " + std::to_string(t_max) + ", g, j <= " + std::to_string(limit), true, 0, 0, {}};
    for (unsigned t = 0; t <= t_max; ++t) {
        const std::uint64_t elements = std::uint64_t{1} << t;
        for (std::uint64_t g = 0; g <= limit && g < elements; ++g)
            for (std::uint64_t j = 0; j <= limit && g + j <= elements; ++j) {
                ++rep.checked;
                std::string why;
                if (!matching_is_valid(build_element_matching(t, g, j), &why))
                    rep.fail({{"t", t}, {"g", g}, {"j", j}, {"reason", why}});
            }
    }
    return rep;
}

} // namespace stickbreak::lemma
