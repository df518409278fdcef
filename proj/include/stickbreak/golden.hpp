#pragma once

/**
 * @file golden.hpp
 * @brief Exact arithmetic in the real quadratic field Q(sqrt 5).
 *
 * A GoldenNumber is p + q*sqrt(5) with rational p, q. The {1, sqrt 5} basis
 * makes the sign test a single rational comparison: when p and q disagree in
 * sign, the component with the larger square (p^2 against 5 q^2) wins.
 *
 * sign_a_plus_b_sqrt5 is the same test on machine integers; the sweep models
 * use it for {m phi} with |m| far below 2^60.
 */

#include "rational.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stickbreak {

using int128 = __int128;

/// Exact sign of a + b*sqrt(5) on machine integers. Requires |a|, |b| < 2^61.
constexpr int sign_a_plus_b_sqrt5(int128 a, int128 b) {
    int sa = (a > 0) - (a < 0);
    int sb = (b > 0) - (b < 0);
    if (sa >= 0 && sb >= 0) return (sa | sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    int128 a2 = a * a;
    int128 b2 = 5 * b * b;
    // a^2 == 5 b^2 only for a = b = 0, excluded above.
    return a2 > b2 ? sa : sb;
}

/// floor(m * phi), exact. Float estimate corrected by exact sign checks.
inline std::int64_t golden_floor_multiple(std::int64_t m) {
    constexpr long double phi = 1.6180339887498948482045868343656381L;
    auto t = static_cast<std::int64_t>(std::floor(static_cast<long double>(m) * phi));
    // m*phi - t = ((m - 2t) + m*sqrt5) / 2
    auto frac_sign = [m](std::int64_t t0) {
        return sign_a_plus_b_sqrt5(static_cast<int128>(m) - 2 * static_cast<int128>(t0), m);
    };
    while (frac_sign(t) < 0) --t;
    while (frac_sign(t + 1) >= 0) ++t;
    return t;
}

class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(Rational p, Rational q = Rational(0)) : p_(std::move(p)), q_(std::move(q)) {}

    /// phi = (1 + sqrt 5) / 2
    static GoldenNumber phi() { return {Rational(1, 2), Rational(1, 2)}; }
    static GoldenNumber sqrt5() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return p_; }
    const Rational& sqrt5_part() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_rational() const { return q_.is_zero(); }

    int sign() const {
        int sp = p_.sign(), sq = q_.sign();
        if (sp >= 0 && sq >= 0) return (sp | sq) ? 1 : 0;
        if (sp <= 0 && sq <= 0) return -1;
        auto lhs = p_ * p_;
        auto rhs = Rational(5) * q_ * q_;
        return lhs > rhs ? sp : sq;
    }

    /// Conjugate p - q sqrt5.
    GoldenNumber conjugate() const { return {p_, -q_}; }
    /// Field norm p^2 - 5 q^2.
    Rational norm() const { return p_ * p_ - Rational(5) * q_ * q_; }

    double to_double() const {
        return static_cast<double>(to_quad());
    }
    __float128 to_quad() const;

    /// Largest integer t with t <= value.
    BigInt floor() const;

    GoldenNumber operator-() const { return {-p_, -q_}; }
    GoldenNumber& operator+=(const GoldenNumber& o) { p_ += o.p_; q_ += o.q_; return *this; }
    GoldenNumber& operator-=(const GoldenNumber& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
    GoldenNumber& operator*=(const GoldenNumber& o) {
        Rational p = p_ * o.p_ + Rational(5) * q_ * o.q_;
        Rational q = p_ * o.q_ + q_ * o.p_;
        p_ = std::move(p);
        q_ = std::move(q);
        return *this;
    }
    GoldenNumber& operator/=(const GoldenNumber& o) {
        if (o.is_zero()) throw std::domain_error("GoldenNumber: division by zero");
        Rational n = o.norm();
        *this *= o.conjugate();
        p_ /= n;
        q_ /= n;
        return *this;
    }

    friend GoldenNumber operator+(GoldenNumber a, const GoldenNumber& b) { return a += b; }
    friend GoldenNumber operator-(GoldenNumber a, const GoldenNumber& b) { return a -= b; }
    friend GoldenNumber operator*(GoldenNumber a, const GoldenNumber& b) { return a *= b; }
    friend GoldenNumber operator/(GoldenNumber a, const GoldenNumber& b) { return a /= b; }

    friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b) {
        return (a - b).sign() <=> 0;
    }

    /// "(p)+(q)sqrt5"
    std::string to_string() const {
        return "(" + p_.to_string() + ")+(" + q_.to_string() + ")sqrt5";
    }
    static GoldenNumber parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) {
        return os << g.to_string();
    }

private:
    Rational p_;
    Rational q_;
};

inline __float128 GoldenNumber::to_quad() const {
    const __float128 s5 = sqrtq(static_cast<__float128>(5));
    __float128 p = p_.to_quad();
    __float128 q = q_.to_quad();
    return p + q * s5;
}

inline BigInt GoldenNumber::floor() const {
    auto estimate = static_cast<long double>(to_double());
    BigInt t;
    mpz_set_d(t.get_mpz_t(), static_cast<double>(std::floor(estimate)));
    auto frac_sign = [this](const BigInt& t0) {
        return (*this - GoldenNumber(Rational(t0, 1))).sign();
    };
    while (frac_sign(t) < 0) t -= 1;
    while (frac_sign(t + 1) >= 0) t += 1;
    return t;
}

inline GoldenNumber GoldenNumber::parse(std::string_view text) {
    // (p)+(q)sqrt5
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("GoldenNumber: malformed '" + s + "'"); };
    if (s.size() < 11 || s.front() != '(' || s.substr(s.size() - 6) != ")sqrt5") throw bad();
    auto mid = s.find(")+(");
    if (mid == std::string::npos) throw bad();
    auto p = Rational::parse(std::string_view(s).substr(1, mid - 1));
    auto q = Rational::parse(std::string_view(s).substr(mid + 3, s.size() - 6 - (mid + 3)));
    return {std::move(p), std::move(q)};
}

inline int golden_sign(const GoldenNumber& x) { return x.sign(); }

/// {m phi} exactly. For negative m this equals 1 - {|m| phi}.
inline GoldenNumber golden_frac(std::int64_t m) {
    std::int64_t t = golden_floor_multiple(m);
    // m phi - t = (m/2 - t) + (m/2) sqrt5
    return {Rational(m, 2) - Rational(t), Rational(m, 2)};
}

} // namespace stickbreak
