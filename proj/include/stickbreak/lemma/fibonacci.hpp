#pragma once

/**
 * @file fibonacci.hpp
 * @brief Fibonacci structure of the golden Kronecker sequence.
 *
 * F_1 = F_2 = 1. The prefix {0, {phi}, .., {(F_k - 1) phi}} has exactly two
 * gap lengths and its interval counts stay within O(1) of F_k * eps.
 * Zeckendorf greedily peels the largest Fibonacci number off A.
 */

#include "../circle_stats.hpp"
#include "../errors.hpp"
#include "../golden.hpp"
#include "../point_models.hpp"
#include "../rational.hpp"
#include "report.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace stickbreak::lemma {

/// F_k for 1 <= k <= 93 (F_93 is the last that fits in 64 bits).
inline std::uint64_t fib(unsigned k) {
    if (k < 1 || k > 93) throw InvalidRange("fib: k outside [1, 93]");
    std::uint64_t a = 1, b = 1;  // F_1, F_2
    for (unsigned i = 2; i < k; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return k == 1 ? a : b;
}

struct ZeckendorfDecomposition {
    std::uint64_t A = 0;
    std::vector<std::uint64_t> parts;  // strictly decreasing Fibonacci values
    std::vector<unsigned> indices;     // k_j with parts[j] = F_{k_j}, k_j >= 2
    std::uint64_t remainder = 0;       // A - sum(parts)
};

/// Greedy decomposition, stopped after `max_parts` parts when given.
inline ZeckendorfDecomposition zeckendorf(std::uint64_t A, std::optional<std::size_t> max_parts = std::nullopt) {
    if (A < 1) throw InvalidRange("zeckendorf: A must be >= 1");
    std::vector<std::uint64_t> table{0, 1};  // table[k] = F_k for k >= 1; F_0 = 0 pads the index
    while (table.back() <= A - table[table.size() - 2]) table.push_back(table.back() + table[table.size() - 2]);
    ZeckendorfDecomposition z{A, {}, {}, A};
    unsigned k = static_cast<unsigned>(table.size()) - 1;
    while (z.remainder > 0 && (!max_parts || z.parts.size() < *max_parts)) {
        while (table[k] > z.remainder) --k;
        z.parts.push_back(table[k]);
        z.indices.push_back(k);
        z.remainder -= table[k];
    }
    return z;
}

/// Greedy parts are strictly decreasing, never use consecutive indices and
/// satisfy remainder <= 2 * (last part).
inline bool zeckendorf_is_valid(const ZeckendorfDecomposition& z) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < z.parts.size(); ++j) {
        if (z.indices[j] < 2 || fib(z.indices[j]) != z.parts[j]) return false;
        if (j > 0 && z.indices[j] + 1 >= z.indices[j - 1]) return false;
        sum += z.parts[j];
    }
    if (sum + z.remainder != z.A) return false;
    if (!z.parts.empty() && z.remainder > 2 * z.parts.back()) return false;
    return true;
}

/// |F_{k+1}/F_k - phi| <= 1/F_k^2, decided in Q(sqrt5).
inline bool fibonacci_approximation_holds(unsigned k) {
    const Rational Fk(static_cast<std::int64_t>(fib(k)));
    const Rational Fk1(static_cast<std::int64_t>(fib(k + 1)));
    GoldenNumber diff = GoldenNumber(Fk1 / Fk) - GoldenNumber::phi();
    if (diff.sign() < 0) diff = -diff;
    return (GoldenNumber(Rational(1) / (Fk * Fk)) - diff).sign() >= 0;
}

inline bool fibonacci_coprime(unsigned k) { return std::gcd(fib(k), fib(k + 1)) == 1; }

/// The F_k points {0, {phi}, .., {(F_k - 1) phi}} in sorted order.
inline std::vector<GoldenModel::Point> fibonacci_prefix(unsigned k) {
    const GoldenModel model;
    const std::uint64_t count = fib(k);
    std::vector<GoldenModel::Point> pts;
    pts.reserve(count);
    pts.push_back(model.origin());
    for (std::uint64_t m = 1; m < count; ++m) pts.push_back(model.point(m));
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return model.less(a, b); });
    return pts;
}

/// max over eps = j/grid (1 <= j < grid) and all circular [x, x + eps) of
/// |count - F_k eps|.
inline Rational fibonacci_prefix_deviation(unsigned k, std::int64_t grid = 64) {
    if (k < 2) throw InvalidRange("fibonacci_prefix_deviation: k must be >= 2");
    if (grid < 2) throw InvalidRange("fibonacci_prefix_deviation: grid must be >= 2");
    const GoldenModel model;
    const auto pts = fibonacci_prefix(k);
    const auto Fk = static_cast<std::int64_t>(fib(k));
    Rational worst(0);
    for (std::int64_t j = 1; j < grid; ++j) {
        const Ratio64 eps{j, grid};
        const auto c = circular_count_extremes(model, std::span<const GoldenModel::Point>(pts), eps);
        const Rational expected(Fk * j, grid);
        for (std::uint64_t count : {c.max_count, c.min_count}) {
            Rational dev = Rational(static_cast<std::int64_t>(count)) - expected;
            if (dev.sign() < 0) dev = -dev;
            if (dev > worst) worst = dev;
        }
    }
    return worst;
}

/// Number of distinct circular gaps while the golden prefix grows to n_max.
struct ThreeGapAudit {
    std::uint64_t n_max = 0;
    bool include_origin = true;
    std::vector<std::uint32_t> distinct;     // distinct[n] for 1 <= n <= n_max (index 0 unused)
    std::uint64_t worst = 0;                 // max over n
    std::vector<std::pair<unsigned, std::uint32_t>> fibonacci_points;  // (k, distinct at n = F_k - 1)
};

inline ThreeGapAudit three_gap_audit(std::uint64_t n_max, bool include_origin = true) {
    const GoldenModel model;
    ThreeGapAudit audit{n_max, include_origin, std::vector<std::uint32_t>(n_max + 1, 0), 0, {}};
    auto less = [&](const GoldenModel::Point& a, const GoldenModel::Point& b) { return model.less(a, b); };
    std::map<GoldenModel::Point, int, decltype(less)> pts(less);
    std::map<std::int64_t, std::uint64_t> gaps;  // gap key -> multiplicity
    auto drop = [&](const GoldenModel::Length& g) {
        auto it = gaps.find(GoldenModel::key(g));
        if (--it->second == 0) gaps.erase(it);
    };
    auto put = [&](const GoldenModel::Length& g) { ++gaps[GoldenModel::key(g)]; };
    auto insert = [&](const GoldenModel::Point& p) {
        auto [it, fresh] = pts.emplace(p, 0);
        if (!fresh) throw DuplicatePoint("three_gap_audit: repeated point");
        if (pts.size() == 1) return;
        auto next = std::next(it) == pts.end() ? pts.begin() : std::next(it);
        auto prev = it == pts.begin() ? std::prev(pts.end()) : std::prev(it);
        if (pts.size() == 2) {
            gaps.clear();
        } else {
            drop(model.arc(prev->first, next->first));
        }
        put(model.arc(prev->first, p));
        put(model.arc(p, next->first));
    };
    if (include_origin) insert(model.origin());
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        insert(model.point(n));
        audit.distinct[n] = static_cast<std::uint32_t>(gaps.size());
        audit.worst = std::max<std::uint64_t>(audit.worst, gaps.size());
    }
    for (unsigned k = 3; k <= 93 && fib(k) - 1 <= n_max; ++k)
        audit.fibonacci_points.emplace_back(k, audit.distinct[fib(k) - 1]);
    return audit;
}

inline VerificationReport verify_fibonacci_facts(unsigned k_max = 40) {
    VerificationReport rep{"fibonacci-approximation", "1 <= k <= " + std::to_string(k_max), true, 0, 0, {}};
    for (unsigned k = 1; k <= k_max; ++k) {
        ++rep.checked;
        if (!fibonacci_approximation_holds(k)) rep.fail({{"k", k}, {"check", "|F_{k+1}/F_k - phi| <= 1/F_k^2"}});
        if (!fibonacci_coprime(k)) rep.fail({{"k", k}, {"check", "gcd(F_k, F_{k+1}) = 1"}});
    }
    return rep;
}

} // namespace stickbreak::lemma
