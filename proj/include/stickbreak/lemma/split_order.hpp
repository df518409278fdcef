#pragma once

/**
 * @file split_order.hpp
 * @brief When a dyadic interval is first cut by the base-2 sequence.
 *
 * After 2^t - 1 points (plus the origin) the elements are exactly the
 * canonical intervals [a/2^t, (a+1)/2^t]. The point that later cuts one of
 * them is its midpoint (2a+1)/2^{t+1}, whose sequence index is the bit
 * reversal of 2a+1 over t+1 bits.
 *
 * Bit strings name a left endpoint by its digits after the binary point,
 * most significant first, so "101" at t = 3 is 5/8. Read backwards these
 * digits are the low bits of the index that cuts the interval.
 */

#include "../errors.hpp"
#include "../radical_inverse.hpp"
#include "report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace stickbreak::lemma {

/// Numerator of the m-th base-2 point at denominator 2^bits.
using VdcNumerator = std::function<std::uint64_t(std::uint64_t m, unsigned bits)>;

inline std::uint64_t vdc_numerator(std::uint64_t m, unsigned bits) { return radical_inverse_numerator(m, 2, bits); }

/// [a/2^t, (a+1)/2^t]
struct CanonicalInterval {
    unsigned level = 0;
    std::uint64_t index = 0;

    CanonicalInterval(unsigned t, std::uint64_t a) : level(t), index(a) {
        if (t > 62) throw InvalidRange("CanonicalInterval: level above 62");
        if (a >= (std::uint64_t{1} << t)) throw InvalidRange("CanonicalInterval: index outside [0, 2^t)");
    }

    friend bool operator==(const CanonicalInterval&, const CanonicalInterval&) = default;
};

/// Sequence index whose point is the interval's midpoint.
inline std::uint64_t split_index(const CanonicalInterval& I) { return bit_reverse(2 * I.index + 1, I.level + 1); }

inline std::uint64_t parse_bits(std::string_view bits) {
    if (bits.size() > 62) throw MalformedBits("bit string longer than 62");
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw MalformedBits("bit string '" + std::string(bits) + "' has a non-binary digit");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

/// True iff the element with left endpoint A0C is cut strictly before the
/// one with left endpoint B1C.
inline bool verify_flip_order(unsigned t, std::string_view A, std::string_view B, std::string_view C) {
    if (A.size() != B.size()) throw MalformedBits("A and B must have equal length");
    if (A.size() + 1 + C.size() != t) throw MalformedBits("|A0C| must equal t");
    const std::string left = std::string(A) + "0" + std::string(C);
    const std::string right = std::string(B) + "1" + std::string(C);
    return split_index({t, parse_bits(left)}) < split_index({t, parse_bits(right)});
}

/// Every (A, B, C) at every level 1..t_max.
inline VerificationReport verify_flip_order_exhaustive(unsigned t_max) {
    VerificationReport rep{"flip-order", "1 <= t <= " + std::to_string(t_max), true, 0, 0, {}};
    for (unsigned t = 1; t <= t_max; ++t) {
        for (unsigned c = 0; c + 1 <= t; ++c) {
            const unsigned ab = t - 1 - c;
            for (std::uint64_t C = 0; C < (std::uint64_t{1} << c); ++C)
                for (std::uint64_t A = 0; A < (std::uint64_t{1} << ab); ++A)
                    for (std::uint64_t B = 0; B < (std::uint64_t{1} << ab); ++B) {
                        const std::uint64_t left = (A << (c + 1)) | C;
                        const std::uint64_t right = (B << (c + 1)) | (std::uint64_t{1} << c) | C;
                        ++rep.checked;
                        if (!(split_index({t, left}) < split_index({t, right})))
                            rep.fail({{"t", t}, {"left", left}, {"right", right}});
                    }
        }
    }
    return rep;
}

/// The midpoint lands on split_index, and no earlier index lands strictly
/// inside the interval. One pass over indices per level.
inline VerificationReport verify_split_index(unsigned t_max, const VdcNumerator& gen = vdc_numerator) {
    VerificationReport rep{"split-index", "0 <= t <= " + std::to_string(t_max), true, 0, 0, {}};
    const unsigned bits = t_max + 1;
    for (unsigned t = 0; t <= t_max; ++t) {
        const std::uint64_t count = std::uint64_t{1} << t;
        const unsigned shift = bits - t;  // element width in numerator units
        std::vector<std::uint64_t> first(count, 0);
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << (t + 1)); ++m) {
            const std::uint64_t p = gen(m, bits);
            if (p & ((std::uint64_t{1} << shift) - 1)) {  // strictly inside element p >> shift
                auto& f = first[p >> shift];
                if (f == 0) f = m;
            }
        }
        for (std::uint64_t a = 0; a < count; ++a) {
            const CanonicalInterval I{t, a};
            const std::uint64_t m = split_index(I);
            ++rep.checked;
            const std::uint64_t midpoint = ((2 * a + 1) << (shift - 1));
            if (gen(m, bits) != midpoint || first[a] != m)
                rep.fail({{"t", t}, {"a", a}, {"split_index", m}, {"first_inside", first[a]}});
        }
    }
    return rep;
}

} // namespace stickbreak::lemma
