#pragma once

/**
 * @file radical_inverse.hpp
 * @brief Base-b digit reversal (van der Corput points) and bit reversal.
 */

#include "rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace stickbreak {

/// Number of base-b digits of m (m >= 1).
constexpr unsigned digit_count(std::uint64_t m, std::uint64_t base) {
    unsigned d = 0;
    while (m > 0) {
        m /= base;
        ++d;
    }
    return d;
}

/// Reverse the low `bits` bits of x.
constexpr std::uint64_t bit_reverse(std::uint64_t x, unsigned bits) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

/// Numerator of the radical inverse of m at the fixed denominator base^digits.
/// Requires digit_count(m, base) <= digits.
constexpr std::uint64_t radical_inverse_numerator(std::uint64_t m, std::uint64_t base, unsigned digits) {
    std::uint64_t num = 0;
    unsigned used = 0;
    while (m > 0) {
        num = num * base + m % base;
        m /= base;
        ++used;
    }
    for (; used < digits; ++used) num *= base;
    return num;
}

/// Digit reversal of m in base b placed after the radix point.
inline Rational radical_inverse(std::uint64_t m, std::uint64_t base) {
    if (m < 1) throw std::invalid_argument("radical_inverse: m must be >= 1");
    if (base < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
    BigInt num = 0, den = 1;
    while (m > 0) {
        num = num * static_cast<unsigned long>(base) + static_cast<unsigned long>(m % base);
        den *= static_cast<unsigned long>(base);
        m /= base;
    }
    return Rational(std::move(num), std::move(den));
}

} // namespace stickbreak
