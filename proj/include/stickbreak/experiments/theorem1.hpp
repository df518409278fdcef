#pragma once

/**
 * @file theorem1.hpp
 * @brief Running maxima of the single-gap statistics for x_k = log2(2k-1) mod 1.
 *
 * x_1 = 0, so the first n points cut the circle into n gaps. For
 * n_start <= n <= n_max the running maxima of n * longest, n * shortest and
 * longest / shortest are tracked in binary128 with first-order error bounds.
 */

#include "../circle_value.hpp"
#include "../errors.hpp"
#include "../point_models.hpp"
#include "../sequence.hpp"

#include <json.hpp>
#include <quadmath.h>

#include <cstdint>
#include <iterator>
#include <set>
#include <string>

namespace stickbreak::experiments {

struct Theorem1Constants {
    std::uint64_t n_start = 0;
    std::uint64_t n_max = 0;
    FloatValue limsup_n_times_longest;
    FloatValue limsup_n_times_shortest;
    FloatValue limsup_ratio;
    std::uint64_t argmax_longest = 0;  // n attaining each running maximum
    std::uint64_t argmax_shortest = 0;
    std::uint64_t argmax_ratio = 0;
    bool precision_warning = false;  // some gap fell below the tie threshold
};

inline Theorem1Constants theorem1_constants(std::uint64_t n_max, std::uint64_t n_start = 1000) {
    if (n_max < n_start || n_start < 2)
        throw InvalidRange("theorem1_constants: need 2 <= n_start <= n_max (n_start=" + std::to_string(n_start) +
                           ", n_max=" + std::to_string(n_max) + ")");
    const LogModel model;
    const __float128 eps = LogModel::length_error();
    std::set<__float128> points;
    std::multiset<__float128> gaps;
    Theorem1Constants out;
    out.n_start = n_start;
    out.n_max = n_max;

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const __float128 p = model.point(n);
        auto [it, fresh] = points.insert(p);
        if (!fresh) throw DuplicatePoint("theorem1_constants: repeated point at index " + std::to_string(n));
        if (points.size() == 1) {
            gaps.insert(1);
        } else {
            auto next = std::next(it) == points.end() ? points.begin() : std::next(it);
            auto prev = it == points.begin() ? std::prev(points.end()) : std::prev(it);
            gaps.erase(gaps.find(model.arc(*prev, *next)));
            const __float128 left = model.arc(*prev, p), right = model.arc(p, *next);
            gaps.insert(left);
            gaps.insert(right);
            if (left < kPrecisionTieThreshold || right < kPrecisionTieThreshold) out.precision_warning = true;
        }
        if (n < n_start) continue;
        const __float128 longest = *gaps.rbegin(), shortest = *gaps.begin();
        const auto N = static_cast<__float128>(n);
        if (N * longest > out.limsup_n_times_longest.value) {
            out.limsup_n_times_longest = {N * longest, N * eps};
            out.argmax_longest = n;
        }
        if (N * shortest > out.limsup_n_times_shortest.value) {
            out.limsup_n_times_shortest = {N * shortest, N * eps};
            out.argmax_shortest = n;
        }
        const __float128 ratio = longest / shortest;
        if (ratio > out.limsup_ratio.value) {
            out.limsup_ratio = {ratio, ratio * (eps / longest + eps / shortest)};
            out.argmax_ratio = n;
        }
    }
    return out;
}

inline nlohmann::json to_json(const Theorem1Constants& t) {
    auto entry = [](const FloatValue& v, std::uint64_t at) {
        char err[48];
        quadmath_snprintf(err, sizeof err, "%.3Qe", v.error);
        return nlohmann::json{{"value", v.to_string()}, {"value_float", v.to_double()}, {"error", err}, {"n", at}};
    };
    return {{"n_start", t.n_start},
            {"n_max", t.n_max},
            {"limsup_n_times_longest", entry(t.limsup_n_times_longest, t.argmax_longest)},
            {"limsup_n_times_shortest", entry(t.limsup_n_times_shortest, t.argmax_shortest)},
            {"limsup_ratio", entry(t.limsup_ratio, t.argmax_ratio)},
            {"precision_warning", t.precision_warning}};
}

} // namespace stickbreak::experiments
