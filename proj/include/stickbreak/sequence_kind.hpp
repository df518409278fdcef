#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stickbreak {

struct SequenceKind {
    enum class Tag { VanDerCorput, KroneckerGolden, DeBruijnErdosLog };

    Tag tag = Tag::VanDerCorput;
    std::uint64_t base = 2;  // van der Corput only

    static SequenceKind van_der_corput(std::uint64_t base = 2) {
        if (base < 2) throw std::invalid_argument("van der Corput base must be >= 2");
        return {Tag::VanDerCorput, base};
    }
    static SequenceKind kronecker_golden() { return {Tag::KroneckerGolden, 0}; }
    static SequenceKind debruijn_log() { return {Tag::DeBruijnErdosLog, 0}; }

    bool is_exact() const { return tag != Tag::DeBruijnErdosLog; }

    /// vdc2 | vdc:<b> | kronecker-phi | debruijn-log
    std::string to_string() const {
        switch (tag) {
        case Tag::VanDerCorput: return base == 2 ? "vdc2" : "vdc:" + std::to_string(base);
        case Tag::KroneckerGolden: return "kronecker-phi";
        case Tag::DeBruijnErdosLog: return "debruijn-log";
        }
        return {};
    }

    static SequenceKind parse(std::string_view s) {
        if (s == "vdc2") return van_der_corput(2);
        if (s == "kronecker-phi") return kronecker_golden();
        if (s == "debruijn-log") return debruijn_log();
        if (s.substr(0, 4) == "vdc:") {
            std::string digits(s.substr(4));
            std::size_t used = 0;
            unsigned long long b = 0;
            try {
                b = std::stoull(digits, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != digits.size())
                throw std::invalid_argument("malformed sequence kind '" + std::string(s) + "'");
            return van_der_corput(b);
        }
        throw std::invalid_argument("unknown sequence kind '" + std::string(s) + "'");
    }

    friend bool operator==(const SequenceKind&, const SequenceKind&) = default;
};

} // namespace stickbreak
