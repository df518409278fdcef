#pragma once

/**
 * @file circle_stats.hpp
 * @brief Circular gap statistics on a sorted prefix.
 *
 * gap_vector        arcs between circularly consecutive points
 * window_extremes   min / max sum of r consecutive gaps (sliding sum)
 * local_discrepancy extreme point counts over intervals [x, x + r/n)
 * pair_correlation  F_N(s) = (1/N) #{m != n : ||x_m - x_n|| <= s/N}
 *
 * Counting works on window sums W_m(i) = arc(p_i, p_{i+m}). For the
 * half-open interval [x, x + L) the largest count is attained with x on a
 * point and the smallest with x just after a point, so
 *
 *   max_count = 1 + #{m >= 1 : W_m(i) <  L}   maximized over i
 *   min_count =     #{m >= 1 : W_m(i) <= L}   minimized over i
 *
 * and a two-pointer sweep over i evaluates both in O(N) comparisons.
 */

#include "circle_value.hpp"
#include "errors.hpp"
#include "point_models.hpp"
#include "reports.hpp"
#include "sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace stickbreak {

template <PointModel Model>
struct GapVector {
    using Length = typename Model::Length;

    SequenceKind kind;
    Model model;
    std::uint64_t n = 0;       // sequence elements behind the gaps
    std::vector<Length> gaps;  // gaps[i] = arc(points[i], points[i+1]), circular
    Length total{};

    std::size_t size() const { return gaps.size(); }
};

template <PointModel Model>
GapVector<Model> gap_vector(const Prefix<Model>& prefix) {
    if (prefix.points.empty()) throw std::invalid_argument("gap_vector: empty prefix");
    GapVector<Model> g{prefix.kind, prefix.model, prefix.n, {}, {}};
    const auto& pts = prefix.points;
    const std::size_t N = pts.size();
    g.gaps.reserve(N);
    for (std::size_t i = 0; i < N; ++i) g.gaps.push_back(prefix.model.arc(pts[i], pts[(i + 1) % N]));
    g.total = g.gaps.front();
    for (std::size_t i = 1; i < N; ++i) g.total = prefix.model.add(g.total, g.gaps[i]);
    return g;
}

/// Min and max over all circular windows of r consecutive gaps.
/// Ties report the first window position.
template <PointModel Model>
WindowReport window_extremes(const GapVector<Model>& g, std::uint64_t r) {
    const std::size_t N = g.size();
    if (r < 1 || r > N)
        throw InvalidWindow("window_extremes: r=" + std::to_string(r) + " outside [1, " + std::to_string(N) + "]");
    const auto& m = g.model;
    auto sum = g.gaps[0];
    for (std::size_t i = 1; i < r; ++i) sum = m.add(sum, g.gaps[i]);
    auto lo = sum, hi = sum;
    std::size_t lo_pos = 0, hi_pos = 0;
    for (std::size_t s = 1; s < N; ++s) {
        sum = m.add(m.sub(sum, g.gaps[s - 1]), g.gaps[(s - 1 + r) % N]);
        if (m.compare(sum, lo) < 0) { lo = sum; lo_pos = s; }
        if (m.compare(sum, hi) > 0) { hi = sum; hi_pos = s; }
    }
    WindowReport w;
    w.kind = g.kind.to_string();
    w.n = g.n;
    w.r = r;
    w.min_sum = m.length_value(lo);
    w.min_pos = lo_pos;
    w.max_sum = m.length_value(hi);
    w.max_pos = hi_pos;
    w.ratio = m.ratio_value(hi, lo);
    w.ratio_float = to_double(w.ratio);
    return w;
}

struct CountExtremes {
    std::uint64_t max_count = 0;
    std::uint64_t min_count = 0;
};

/// Extreme counts of points in circular intervals [x, x + L), L < 1, over
/// sorted points. Two-pointer sweep, O(N) model comparisons.
template <PointModel Model>
CountExtremes circular_count_extremes(const Model& model, std::span<const typename Model::Point> pts, Ratio64 L) {
    const std::size_t N = pts.size();
    CountExtremes out{0, N};
    std::size_t j_lt = 1, j_le = 1;  // absolute indices, j - i = window width tested next
    for (std::size_t i = 0; i < N; ++i) {
        j_lt = std::max(j_lt, i + 1);
        j_le = std::max(j_le, i + 1);
        while (j_lt - i <= N - 1 && model.compare(model.arc(pts[i], pts[j_lt % N]), L) < 0) ++j_lt;
        while (j_le - i <= N - 1 && model.compare(model.arc(pts[i], pts[j_le % N]), L) <= 0) ++j_le;
        out.max_count = std::max<std::uint64_t>(out.max_count, j_lt - i);  // includes p_i itself
        out.min_count = std::min<std::uint64_t>(out.min_count, j_le - i - 1);
    }
    return out;
}

/// Extreme counts over [x, x + L) with 0 <= x <= 1 - L (no wrap), exact.
template <PointModel Model>
CountExtremes linear_count_extremes(const Model& model, std::span<const typename Model::Point> pts, Ratio64 L) {
    // Every count value is attained at x = 0 or just after an event, where
    // events are the points and the points shifted left by L.
    std::vector<Value> values;
    values.reserve(pts.size());
    for (const auto& p : pts) values.push_back(model.point_value(p));
    const Value len = L.to_rational();
    auto add = [](const Value& a, const Value& b) -> Value {
        if (is_exact(a) && is_exact(b)) return to_golden(a) + to_golden(b);
        return FloatValue{to_quad(a) + to_quad(b), 0};
    };
    auto neg = [](const Value& a) -> Value {
        if (is_exact(a)) return -to_golden(a);
        return FloatValue{-to_quad(a), 0};
    };
    auto less = [](const Value& a, const Value& b) { return compare(a, b) < 0; };
    // #points in (lo, hi]
    auto count_open_closed = [&](const Value& lo, const Value& hi) {
        auto a = std::upper_bound(values.begin(), values.end(), lo, less);
        auto b = std::upper_bound(values.begin(), values.end(), hi, less);
        return static_cast<std::uint64_t>(b > a ? b - a : 0);
    };
    const Value zero = Rational(0);
    const Value right_end = add(Rational(1), neg(len));  // 1 - L

    auto at_zero = static_cast<std::uint64_t>(
        std::lower_bound(values.begin(), values.end(), len, less) - values.begin());  // points < L
    CountExtremes out{at_zero, at_zero};
    auto consider = [&](const Value& e) {
        if (compare(e, zero) < 0 || compare(e, right_end) >= 0) return;
        auto c = count_open_closed(e, add(e, len));
        out.max_count = std::max(out.max_count, c);
        out.min_count = std::min(out.min_count, c);
    };
    for (const auto& v : values) {
        consider(v);
        consider(add(v, neg(len)));
    }
    return out;
}

/// Deviation of the point count in intervals of length r/n from r.
/// `wrap = false` restricts to 0 <= x <= 1 - r/n.
template <PointModel Model>
DiscrepancyReport local_discrepancy(const Prefix<Model>& prefix, std::uint64_t r, bool wrap = true) {
    if (r < 1 || r >= prefix.n)
        throw InvalidWindow("local_discrepancy: need 1 <= r < n (r=" + std::to_string(r) +
                            ", n=" + std::to_string(prefix.n) + ")");
    Ratio64 L{static_cast<std::int64_t>(r), static_cast<std::int64_t>(prefix.n)};
    std::span<const typename Model::Point> pts(prefix.points);
    CountExtremes c = wrap ? circular_count_extremes(prefix.model, pts, L) : linear_count_extremes(prefix.model, pts, L);
    auto dev = [r](std::uint64_t v) { return v > r ? v - r : r - v; };
    return {prefix.kind.to_string(), prefix.n, r, c.max_count, c.min_count, std::max(dev(c.max_count), dev(c.min_count))};
}

/// Ordered pairs (i, j), i != j, with circular distance <= t, where
/// `within(len)` decides len <= t. Requires t < 1/2.
template <PointModel Model, class Within>
std::uint64_t count_close_pairs(const Model& model, std::span<const typename Model::Point> pts, Within within) {
    const std::size_t N = pts.size();
    std::uint64_t unordered = 0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < N; ++i) {
        j = std::max(j, i + 1);
        while (j - i <= N - 1 && within(model.arc(pts[i], pts[j % N]))) ++j;
        unordered += j - i - 1;
    }
    return 2 * unordered;
}

/// F_N(s) on a prefix without the origin. `s` may be any exact positive value
/// (or a float for the log sequence).
template <PointModel Model>
PairCorrelationReport pair_correlation(const Prefix<Model>& prefix, const Value& s) {
    if (prefix.include_origin) throw std::invalid_argument("pair_correlation: prefix must not include the origin");
    if (compare(s, Value(Rational(0))) <= 0) throw std::invalid_argument("pair_correlation: s must be positive");
    const auto& model = prefix.model;
    const std::uint64_t N = prefix.size();
    std::span<const typename Model::Point> pts(prefix.points);

    // threshold t = s / N; t >= 1/2 covers every pair
    std::uint64_t ordered = 0;
    const auto* rs = std::get_if<Rational>(&s);
    const BigInt limit = BigInt(1) << 62;
    if (compare(s, Value(Rational(static_cast<std::int64_t>(N), 2))) >= 0) {
        ordered = N * (N - 1);
    } else if (rs && rs->numerator() < limit && rs->denominator() * N < limit) {
        Ratio64 t{rs->numerator().get_si(), static_cast<std::int64_t>(rs->denominator().get_si() * N)};
        ordered = count_close_pairs(model, pts, [&](const auto& len) { return model.compare(len, t) <= 0; });
    } else {
        Value t;
        if (is_exact(s)) t = to_golden(s) / GoldenNumber(Rational(static_cast<std::int64_t>(N)));
        else t = FloatValue{to_quad(s) / static_cast<__float128>(N), 0};
        ordered = count_close_pairs(model, pts,
                                    [&](const auto& len) { return compare(model.length_value(len), t) <= 0; });
    }
    return {prefix.kind.to_string(), N, s, Rational(static_cast<std::int64_t>(ordered), static_cast<std::int64_t>(N))};
}

} // namespace stickbreak
