#pragma once

/**
 * @file circle_value.hpp
 * @brief Uniform scalar and point coordinate across the three sequences.
 *
 * Value is the tagged union {Rational, GoldenNumber, FloatValue}. Comparisons
 * between two exact alternatives are exact (a Rational embeds into Q(sqrt 5));
 * anything involving a FloatValue is decided on the float and is only
 * meaningful up to the carried error bound.
 *
 * CircleValue adds the [0, 1) range invariant for point coordinates.
 */

#include "golden.hpp"
#include "rational.hpp"

#include <quadmath.h>

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace stickbreak {

/// High-precision float with an absolute error bound.
struct FloatValue {
    __float128 value = 0;
    __float128 error = 0;

    double to_double() const { return static_cast<double>(value); }

    std::string to_string() const {
        char buf[64];
        quadmath_snprintf(buf, sizeof buf, "%.36Qg", value);
        std::string s = buf;
        // keep the float shape so parse_value does not read it back as a Rational
        if (s.find_first_of(".eni") == std::string::npos) s += ".0";
        return s;
    }

    /// Equality on the value; the error bound is metadata.
    friend bool operator==(const FloatValue& a, const FloatValue& b) { return a.value == b.value; }

    static FloatValue parse(std::string_view text, __float128 error = 0) {
        std::string s(text);
        char* end = nullptr;
        __float128 v = strtoflt128(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw std::invalid_argument("FloatValue: malformed '" + s + "'");
        return {v, error};
    }
};

/// 2^-60, the largest error a FloatValue point coordinate may carry.
inline const __float128 kFloatPointErrorLimit = scalbnq(static_cast<__float128>(1), -60);

using Value = std::variant<Rational, GoldenNumber, FloatValue>;

inline double to_double(const Value& v) {
    return std::visit([](const auto& x) { return x.to_double(); }, v);
}

inline __float128 to_quad(const Value& v) {
    return std::visit(
        [](const auto& x) -> __float128 {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FloatValue>)
                return x.value;
            else
                return x.to_quad();
        },
        v);
}

inline bool is_exact(const Value& v) { return !std::holds_alternative<FloatValue>(v); }

inline GoldenNumber to_golden(const Value& v) {
    if (auto r = std::get_if<Rational>(&v)) return GoldenNumber(*r);
    if (auto g = std::get_if<GoldenNumber>(&v)) return *g;
    throw std::invalid_argument("to_golden: value is not exact");
}

/// Exact when both sides are exact, float comparison otherwise.
inline std::partial_ordering compare(const Value& a, const Value& b) {
    if (is_exact(a) && is_exact(b)) {
        if (auto ra = std::get_if<Rational>(&a))
            if (auto rb = std::get_if<Rational>(&b)) return *ra <=> *rb;
        return to_golden(a) <=> to_golden(b);
    }
    return to_quad(a) <=> to_quad(b);
}

/// "p/q", "(p)+(q)sqrt5", or a 36-digit decimal.
inline std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

/// Inverse of to_string: the text shape selects the alternative.
inline Value parse_value(std::string_view text) {
    if (!text.empty() && text.front() == '(') return GoldenNumber::parse(text);
    bool rational_shape = !text.empty();
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) rational_shape = false;
    if (rational_shape) return Rational::parse(text);
    return FloatValue::parse(text);
}

/// Point coordinate on the circle [0, 1).
class CircleValue {
public:
    explicit CircleValue(Value v) : v_(std::move(v)) {
        if (is_exact(v_)) {
            auto g = to_golden(v_);
            if (g.sign() < 0 || (g - GoldenNumber(Rational(1))).sign() >= 0)
                throw std::out_of_range("CircleValue: " + stickbreak::to_string(v_) + " not in [0,1)");
        } else {
            const auto& f = std::get<FloatValue>(v_);
            if (f.value < 0 || f.value >= 1 || f.error > kFloatPointErrorLimit)
                throw std::out_of_range("CircleValue: float coordinate out of range");
        }
    }

    const Value& value() const { return v_; }
    bool is_dyadic_or_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_golden() const { return std::holds_alternative<GoldenNumber>(v_); }
    bool is_float() const { return std::holds_alternative<FloatValue>(v_); }

    double to_double() const { return stickbreak::to_double(v_); }
    std::string to_string() const { return stickbreak::to_string(v_); }

    friend std::partial_ordering operator<=>(const CircleValue& a, const CircleValue& b) {
        return compare(a.v_, b.v_);
    }
    friend bool operator==(const CircleValue& a, const CircleValue& b) {
        return compare(a.v_, b.v_) == 0;
    }

private:
    Value v_;
};

} // namespace stickbreak
