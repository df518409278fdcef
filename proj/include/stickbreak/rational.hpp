#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Thin value type over GMP's mpq_class. Every constructor and operator
 * leaves the fraction canonical: denominator positive, gcd(|num|, den) = 1,
 * zero stored as 0/1. Text form is "p/q" (or "p" when q = 1) and parses back
 * exactly.
 */

#include <gmpxx.h>
#include <quadmath.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stickbreak {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(to_mpz(n)) {}
    Rational(std::int64_t n, std::int64_t d) : Rational(to_mpz(n), to_mpz(d)) {}
    Rational(BigInt n, BigInt d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(std::move(n), std::move(d));
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational dyadic(std::int64_t numerator, unsigned exponent) {
        BigInt den = 1;
        den <<= exponent;
        return Rational(to_mpz(numerator), std::move(den));
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }
    /// Rounded to 113-bit binary128 (numerator and denominator each rounded once).
    __float128 to_quad() const;

    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static BigInt to_mpz(std::int64_t n) {
        BigInt z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
        return z;
    }

    mpq_class v_{0};
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    BigInt num, den = 1;
    auto parse_int = [&](const std::string& part, BigInt& out) {
        if (part.empty() || out.set_str(part, 10) != 0)
            throw std::invalid_argument("Rational: malformed integer '" + part + "'");
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    return Rational(std::move(num), std::move(den));
}

namespace detail {

/// Top 113 bits of |z| as binary128 mantissa, with the dropped bit count.
inline __float128 mpz_top_quad(const BigInt& z, long& dropped) {
    BigInt mag = abs(z);
    std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    dropped = bits > 113 ? static_cast<long>(bits - 113) : 0;
    if (dropped > 0) mag >>= dropped;
    BigInt hi = mag >> 64;
    BigInt lo = mag - (hi << 64);
    __float128 acc = static_cast<__float128>(mpz_get_ui(hi.get_mpz_t()));
    acc *= static_cast<__float128>(18446744073709551616.0);
    acc += static_cast<__float128>(mpz_get_ui(lo.get_mpz_t()));
    return sgn(z) < 0 ? -acc : acc;
}

} // namespace detail

inline __float128 Rational::to_quad() const {
    long en = 0, ed = 0;
    __float128 n = detail::mpz_top_quad(v_.get_num(), en);
    __float128 d = detail::mpz_top_quad(v_.get_den(), ed);
    return scalbnq(n / d, static_cast<int>(en - ed));
}

inline std::strong_ordering rational_compare(const Rational& a, const Rational& b) {
    return a <=> b;
}

} // namespace stickbreak
