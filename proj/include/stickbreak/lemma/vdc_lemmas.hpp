#pragma once

/**
 * @file vdc_lemmas.hpp
 * @brief Exact checks of the window bounds of the base-2 sequence.
 *
 * Points are numerators over 2^bits. With 0 = x_0 < x_1 < .. < x_n sorted
 * and indices read cyclically (a window may pass through 0):
 *
 *   main lemma     x_r <= x_{i+r} - x_i <= 1 - x_{n+1-r}    for all i, 1 <= r <= n
 *   shift lemma    len[x_t, x_{t+r}] >= len[x_{t-1}, x_{t+r-1}]
 *                  whenever x_t = a / 2^{k+1} with a odd, k = floor(log2 n)
 *   self-similar   2^{k-a-1} * v(2^k + m 2^{k-a-1}) = v(m) + 2^{-(a+2)}
 *                  for 1 <= m < 2^{a+1}, v = raw sequence value by index
 *
 * The sweeps grow one sorted prefix and check every r at each n.
 */

#include "../errors.hpp"
#include "../radical_inverse.hpp"
#include "../rational.hpp"
#include "report.hpp"
#include "split_order.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

namespace stickbreak::lemma {

namespace detail {

/// Sorted prefix with origin, grown one index at a time.
class VdcPrefix {
public:
    VdcPrefix(unsigned bits, const VdcNumerator& gen) : bits_(bits), gen_(gen), points_{0} {}

    void grow() {
        const std::uint64_t p = gen_(points_.size(), bits_);
        auto at = std::lower_bound(points_.begin(), points_.end(), p);
        if (at != points_.end() && *at == p) throw DuplicatePoint("VdcPrefix: repeated point");
        points_.insert(at, p);
    }
    std::uint64_t n() const { return points_.size() - 1; }
    std::uint64_t scale() const { return std::uint64_t{1} << bits_; }
    unsigned bits() const { return bits_; }
    const std::vector<std::uint64_t>& points() const { return points_; }

    /// Gaps g[i] = x_{i+1} - x_i, cyclic.
    std::vector<std::uint64_t> gaps() const {
        const std::size_t N = points_.size();
        std::vector<std::uint64_t> g(N);
        for (std::size_t i = 0; i + 1 < N; ++i) g[i] = points_[i + 1] - points_[i];
        g[N - 1] = scale() - points_[N - 1];
        return g;
    }

private:
    unsigned bits_;
    VdcNumerator gen_;
    std::vector<std::uint64_t> points_;
};

inline unsigned bits_for(std::uint64_t n_max) { return std::max(1u, static_cast<unsigned>(std::bit_width(n_max))); }

/// Unrolled cumulative positions over two turns: window (i, r) = pos[i+r] - pos[i].
inline std::vector<std::uint64_t> turn_positions(const VdcPrefix& pre) {
    const auto gap = pre.gaps();
    const std::size_t N = gap.size();
    std::vector<std::uint64_t> pos(2 * N + 1, 0);
    for (std::size_t i = 0; i < 2 * N; ++i) pos[i + 1] = pos[i] + gap[i % N];
    return pos;
}

/// Main Lemma at one (n, r) on a ready prefix; appends a counterexample on failure.
inline bool check_main(const VdcPrefix& pre, const std::vector<std::uint64_t>& pos, std::uint64_t r,
                       VerificationReport* rep) {
    const auto& x = pre.points();
    const std::size_t N = x.size();  // n + 1 gaps
    const std::uint64_t n = pre.n();
    const std::uint64_t lower = x[r];
    const std::uint64_t upper = pre.scale() - x[n + 1 - r];
    std::uint64_t lo = pos[r], hi = pos[r];
    for (std::size_t i = 1; i < N; ++i) {
        const std::uint64_t w = pos[i + r] - pos[i];
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    if (lo >= lower && hi <= upper) return true;
    if (rep) {
        std::size_t i = 0;
        while (pos[i + r] - pos[i] >= lower && pos[i + r] - pos[i] <= upper) ++i;
        auto text = [&](std::uint64_t v) { return Rational::dyadic(static_cast<std::int64_t>(v), pre.bits()).to_string(); };
        rep->fail({{"n", n}, {"r", r}, {"i", i}, {"window", text(pos[i + r] - pos[i])}, {"lower", text(lower)},
                   {"upper", text(upper)}});
    }
    return false;
}

/// Sorted positions t >= 1 with x_t = a / 2^{k+1}, a odd, k = floor(log2 n).
inline std::vector<std::size_t> fine_odd_positions(const VdcPrefix& pre) {
    const auto& x = pre.points();
    const unsigned k = static_cast<unsigned>(std::bit_width(pre.n())) - 1;
    if (pre.bits() < k + 1) throw std::logic_error("fine_odd_positions: prefix too coarse");
    const unsigned fine = pre.bits() - (k + 1);  // lowest set bit of the numerator
    const std::uint64_t mask = (std::uint64_t{1} << (fine + 1)) - 1;
    std::vector<std::size_t> out;
    for (std::size_t t = 1; t < x.size(); ++t)
        if ((x[t] & mask) == (std::uint64_t{1} << fine)) out.push_back(t);
    return out;
}

inline bool check_shift(const VdcPrefix& pre, const std::vector<std::uint64_t>& pos,
                        const std::vector<std::size_t>& odd, std::uint64_t r, VerificationReport* rep) {
    bool ok = true;
    for (std::size_t t : odd) {
        if (pos[t + r] - pos[t] < pos[t - 1 + r] - pos[t - 1]) {
            ok = false;
            if (rep) rep->fail({{"n", pre.n()}, {"r", r}, {"t", t}});
        }
    }
    return ok;
}

} // namespace detail

/// Main Lemma for one (n, r), 1 <= r <= n.
inline bool verify_main_lemma(std::uint64_t n, std::uint64_t r, const VdcNumerator& gen = vdc_numerator) {
    if (n < 1 || r < 1 || r > n) throw InvalidWindow("verify_main_lemma: need 1 <= r <= n");
    detail::VdcPrefix pre(detail::bits_for(n), gen);
    for (std::uint64_t m = 1; m <= n; ++m) pre.grow();
    return detail::check_main(pre, detail::turn_positions(pre), r, nullptr);
}

inline bool verify_shift_lemma(std::uint64_t n, std::uint64_t r, const VdcNumerator& gen = vdc_numerator) {
    if (n < 1 || r < 1 || r > n) throw InvalidWindow("verify_shift_lemma: need 1 <= r <= n");
    detail::VdcPrefix pre(detail::bits_for(n) + 1, gen);
    for (std::uint64_t m = 1; m <= n; ++m) pre.grow();
    return detail::check_shift(pre, detail::turn_positions(pre), detail::fine_odd_positions(pre), r, nullptr);
}

/// Main Lemma for every 1 <= r <= n <= n_max.
inline VerificationReport verify_main_lemma_range(std::uint64_t n_max, const VdcNumerator& gen = vdc_numerator) {
    VerificationReport rep{"main-lemma", "1 <= r <= n <= " + std::to_string(n_max), true, 0, 0, {}};
    detail::VdcPrefix pre(detail::bits_for(n_max), gen);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        pre.grow();
        const auto pos = detail::turn_positions(pre);
        for (std::uint64_t r = 1; r <= n; ++r) {
            ++rep.checked;
            detail::check_main(pre, pos, r, &rep);
        }
    }
    return rep;
}

inline VerificationReport verify_shift_lemma_range(std::uint64_t n_max, const VdcNumerator& gen = vdc_numerator) {
    VerificationReport rep{"shift-lemma", "1 <= r <= n <= " + std::to_string(n_max), true, 0, 0, {}};
    detail::VdcPrefix pre(detail::bits_for(n_max) + 1, gen);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        pre.grow();
        const auto pos = detail::turn_positions(pre);
        const auto odd = detail::fine_odd_positions(pre);
        for (std::uint64_t r = 1; r <= n; ++r) {
            ++rep.checked;
            detail::check_shift(pre, pos, odd, r, &rep);
        }
    }
    return rep;
}

/// Self-similarity at (k, a) for every 1 <= m < 2^{a+1}, in exact rationals.
inline bool verify_self_similarity(unsigned k, unsigned a, const VdcNumerator& gen = vdc_numerator,
                                   VerificationReport* rep = nullptr) {
    if (k > 40 || a + 1 > k) throw InvalidRange("verify_self_similarity: need 0 <= a < k <= 40");
    const unsigned bits = k + 1;  // every index used is below 2^{k+1}
    auto value = [&](std::uint64_t m) { return Rational::dyadic(static_cast<std::int64_t>(gen(m, bits)), bits); };
    const std::uint64_t stride = std::uint64_t{1} << (k - a - 1);
    const Rational scale(static_cast<std::int64_t>(stride));
    const Rational shift = Rational::dyadic(1, a + 2);
    bool ok = true;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (a + 1)); ++m) {
        const std::uint64_t idx = (std::uint64_t{1} << k) + m * stride;
        const Rational lhs = scale * value(idx);
        const Rational rhs = value(m) + shift;
        if (rep) ++rep->checked;
        if (lhs != rhs) {
            ok = false;
            if (rep) rep->fail({{"k", k}, {"a", a}, {"m", m}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
        }
    }
    return ok;
}

inline VerificationReport verify_self_similarity_range(unsigned k_max, const VdcNumerator& gen = vdc_numerator) {
    VerificationReport rep{"self-similarity", "0 <= a < k <= " + std::to_string(k_max), true, 0, 0, {}};
    for (unsigned k = 1; k <= k_max; ++k)
        for (unsigned a = 0; a < k; ++a) verify_self_similarity(k, a, gen, &rep);
    return rep;
}

} // namespace stickbreak::lemma
