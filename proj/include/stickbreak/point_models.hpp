#pragma once

/**
 * @file point_models.hpp
 * @brief Machine representations of sequence points and arc lengths.
 *
 * A point model fixes how one sequence is stored on the circle so that the
 * statistics code can stay generic. Each model supplies:
 *
 *   point(m)          the m-th sequence element (origin() for x_0 = 0)
 *   less(p, q)        exact order of two points
 *   arc(p, q)         forward arc length from p to q; arc(p, p) is the full circle
 *   compare(a, b)     order of two lengths (-1, 0, +1)
 *   compare(a, t)     order of a length against a small fraction t
 *   add / sub / full  exact length arithmetic
 *   *_value           conversion to the arbitrary-precision Value union
 *
 * RadixModel and GoldenModel are exact: van der Corput points are integers
 * over a fixed power of the base, and {m phi} is carried as (m, floor(m phi))
 * with lengths (a + b sqrt5)/2 compared by the int128 sign test. LogModel
 * stores binary128 floats with a fixed per-point error bound.
 */

#include "circle_value.hpp"
#include "golden.hpp"
#include "radical_inverse.hpp"
#include "rational.hpp"

#include <quadmath.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace stickbreak {

/// Nonnegative fraction num/den on machine integers, den > 0.
struct Ratio64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational to_rational() const { return Rational(num, den); }
};

template <class M>
concept PointModel = requires(const M model, typename M::Point p, typename M::Length a, Ratio64 t,
                              std::uint64_t m) {
    { model.point(m) } -> std::same_as<typename M::Point>;
    { model.origin() } -> std::same_as<typename M::Point>;
    { model.less(p, p) } -> std::same_as<bool>;
    { model.arc(p, p) } -> std::same_as<typename M::Length>;
    { model.compare(a, a) } -> std::same_as<int>;
    { model.compare(a, t) } -> std::same_as<int>;
    { model.add(a, a) } -> std::same_as<typename M::Length>;
    { model.sub(a, a) } -> std::same_as<typename M::Length>;
    { model.full() } -> std::same_as<typename M::Length>;
    { model.point_value(p) } -> std::same_as<Value>;
    { model.length_value(a) } -> std::same_as<Value>;
    { model.ratio_value(a, a) } -> std::same_as<Value>;
    { model.to_double(a) } -> std::same_as<double>;
    { M::is_exact } -> std::convertible_to<bool>;
};

namespace detail {
constexpr int sign_of(int128 v) { return (v > 0) - (v < 0); }
}

/// Van der Corput in base b, points as numerators over base^digits.
class RadixModel {
public:
    using Point = std::uint64_t;
    using Length = std::uint64_t;
    static constexpr bool is_exact = true;

    RadixModel(std::uint64_t base, unsigned digits) : base_(base), digits_(digits), scale_(1) {
        if (base < 2) throw std::invalid_argument("RadixModel: base must be >= 2");
        for (unsigned i = 0; i < digits; ++i) {
            if (scale_ > (std::uint64_t{1} << 62) / base)
                throw std::overflow_error("RadixModel: base^digits exceeds 2^62");
            scale_ *= base;
        }
    }

    /// Smallest common denominator that holds every point x_1 .. x_{n_max}.
    static RadixModel for_count(std::uint64_t base, std::uint64_t n_max) {
        return RadixModel(base, digit_count(n_max < 1 ? 1 : n_max, base));
    }

    std::uint64_t base() const { return base_; }
    unsigned digits() const { return digits_; }
    std::uint64_t scale() const { return scale_; }

    Point point(std::uint64_t m) const {
        if (digit_count(m, base_) > digits_) throw std::out_of_range("RadixModel: index beyond model scale");
        return radical_inverse_numerator(m, base_, digits_);
    }
    Point origin() const { return 0; }
    bool less(Point p, Point q) const { return p < q; }
    Length arc(Point from, Point to) const { return to > from ? to - from : to + scale_ - from; }
    int compare(Length a, Length b) const { return (a > b) - (a < b); }
    int compare(Length a, Ratio64 t) const {
        return detail::sign_of(static_cast<int128>(a) * t.den - static_cast<int128>(t.num) * scale_);
    }
    Length add(Length a, Length b) const { return a + b; }
    Length sub(Length a, Length b) const { return a - b; }
    Length full() const { return scale_; }
    /// Additive, and injective on lengths in (0, 1].
    static std::int64_t key(Length a) { return static_cast<std::int64_t>(a); }

    Value point_value(Point p) const { return Rational(bigint(p), bigint(scale_)); }
    Value length_value(Length a) const { return Rational(bigint(a), bigint(scale_)); }
    Value ratio_value(Length num, Length den) const { return Rational(bigint(num), bigint(den)); }
    double to_double(Length a) const { return static_cast<double>(a) / static_cast<double>(scale_); }

private:
    static BigInt bigint(std::uint64_t v) {
        BigInt z;
        mpz_set_ui(z.get_mpz_t(), v);
        return z;
    }

    std::uint64_t base_;
    unsigned digits_;
    std::uint64_t scale_;
};

/// {m phi}; a point is (m, floor(m phi)), a length is (a + b sqrt5) / 2.
class GoldenModel {
public:
    struct Point {
        std::int64_t m = 0;
        std::int64_t floor = 0;
        friend bool operator==(const Point&, const Point&) = default;
    };
    struct Length {
        std::int64_t a = 0;
        std::int64_t b = 0;
        friend bool operator==(const Length&, const Length&) = default;
    };
    static constexpr bool is_exact = true;

    Point point(std::uint64_t m) const {
        auto mi = static_cast<std::int64_t>(m);
        return {mi, golden_floor_multiple(mi)};
    }
    Point origin() const { return {0, 0}; }

    bool less(Point p, Point q) const { return sign(difference(p, q)) > 0; }

    Length arc(Point from, Point to) const {
        Length d = difference(from, to);
        if (sign(d) <= 0) d.a += 2;
        return d;
    }
    int compare(Length x, Length y) const { return sign_a_plus_b_sqrt5(int128{x.a} - y.a, int128{x.b} - y.b); }
    int compare(Length x, Ratio64 t) const {
        // (a + b sqrt5)/2 - num/den  ~  (a*den - 2 num) + b*den sqrt5
        return sign_a_plus_b_sqrt5(int128{x.a} * t.den - 2 * int128{t.num}, int128{x.b} * t.den);
    }
    Length add(Length x, Length y) const { return {x.a + y.a, x.b + y.b}; }
    Length sub(Length x, Length y) const { return {x.a - y.a, x.b - y.b}; }
    Length full() const { return {2, 0}; }
    /// Additive, and injective on lengths in (0, 1): a is fixed by b and the range.
    static std::int64_t key(Length x) { return x.b; }

    Value point_value(Point p) const { return length_value(difference(origin(), p)); }
    Value length_value(Length x) const { return GoldenNumber(Rational(x.a, 2), Rational(x.b, 2)); }
    Value ratio_value(Length num, Length den) const {
        return to_golden(length_value(num)) / to_golden(length_value(den));
    }
    double to_double(Length x) const {
        return (static_cast<double>(x.a) + static_cast<double>(x.b) * 2.23606797749978969640) / 2.0;
    }

    static int sign(Length x) { return sign_a_plus_b_sqrt5(x.a, x.b); }

private:
    /// (to - from) as a real number, without reduction mod 1.
    static Length difference(Point from, Point to) {
        std::int64_t dm = to.m - from.m;
        std::int64_t df = to.floor - from.floor;
        return {dm - 2 * df, dm};
    }
};

/// x_m = log2(2m - 1) mod 1 in binary128.
class LogModel {
public:
    using Point = __float128;
    using Length = __float128;
    static constexpr bool is_exact = false;

    /// log2q is accurate to a few ulps; values stay below 2^6, so 2^-100 is a safe bound.
    static __float128 point_error() { return scalbnq(static_cast<__float128>(1), -100); }
    static __float128 length_error() { return 2 * point_error(); }

    Point point(std::uint64_t m) const {
        if (m < 1) throw std::invalid_argument("LogModel: m must be >= 1");
        __float128 v = log2q(static_cast<__float128>(2 * m - 1));
        return v - floorq(v);
    }
    Point origin() const { return 0; }
    bool less(Point p, Point q) const { return p < q; }
    Length arc(Point from, Point to) const {
        __float128 d = to - from;
        return d > 0 ? d : d + 1;
    }
    int compare(Length a, Length b) const { return (a > b) - (a < b); }
    int compare(Length a, Ratio64 t) const {
        __float128 v = static_cast<__float128>(t.num) / static_cast<__float128>(t.den);
        return (a > v) - (a < v);
    }
    Length add(Length a, Length b) const { return a + b; }
    Length sub(Length a, Length b) const { return a - b; }
    Length full() const { return 1; }

    Value point_value(Point p) const { return FloatValue{p, point_error()}; }
    Value length_value(Length a) const { return FloatValue{a, length_error()}; }
    Value ratio_value(Length num, Length den) const {
        // first-order relative error propagation
        __float128 r = num / den;
        __float128 err = r * (length_error() / num + length_error() / den);
        return FloatValue{r, err};
    }
    double to_double(Length a) const { return static_cast<double>(a); }
};

static_assert(PointModel<RadixModel>);
static_assert(PointModel<GoldenModel>);
static_assert(PointModel<LogModel>);

} // namespace stickbreak
