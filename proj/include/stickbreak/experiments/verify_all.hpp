#pragma once

/**
 * @file verify_all.hpp
 * @brief Every lemma verifier at the given scales, as one report list.
 *
 * t_max drives the dyadic checks (split index, flip order, matchings,
 * self-similarity); n_max drives the prefix checks (main and shift lemma,
 * three-gap audit). The generator is injectable so a corrupted one can be
 * shown to fail.
 */

#include "../lemma/element_matching.hpp"
#include "../lemma/fibonacci.hpp"
#include "../lemma/report.hpp"
#include "../lemma/split_order.hpp"
#include "../lemma/vdc_lemmas.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickbreak::experiments {

struct VerifyAllResult {
    std::vector<lemma::VerificationReport> reports;
    bool all_passed = true;

    int exit_status() const { return all_passed ? 0 : 1; }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(lemma::to_json(r));
        return arr;
    }
};

/// Greedy remainder bound on `samples` pseudo-random A <= a_max, every part count.
inline lemma::VerificationReport verify_zeckendorf(std::uint64_t samples = 10000, std::uint64_t a_max = 1000000000000ULL,
                                                   std::uint64_t seed = 1) {
    lemma::VerificationReport rep{"zeckendorf-remainder",
                                  std::to_string(samples) + " random A <= " + std::to_string(a_max), true, 0, 0, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, a_max);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::uint64_t A = pick(rng);
        const auto full = lemma::zeckendorf(A);
        for (std::size_t l = 1; l <= full.parts.size(); ++l) {
            ++rep.checked;
            const auto z = lemma::zeckendorf(A, l);
            if (!lemma::zeckendorf_is_valid(z) || z.remainder > 2 * z.parts.back())
                rep.fail({{"A", A}, {"max_parts", l}, {"remainder", z.remainder}});
        }
    }
    return rep;
}

/// At most three distinct gaps for every golden prefix up to n_max.
inline lemma::VerificationReport verify_three_gaps(std::uint64_t n_max) {
    lemma::VerificationReport rep{"three-gap", "1 <= n <= " + std::to_string(n_max) + ", with origin", true, 0, 0, {}};
    const auto audit = lemma::three_gap_audit(n_max, true);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        ++rep.checked;
        if (audit.distinct[n] > 3) rep.fail({{"n", n}, {"distinct_gaps", audit.distinct[n]}});
    }
    return rep;
}

inline VerifyAllResult verify_all(unsigned t_max, std::uint64_t n_max,
                                  const lemma::VdcNumerator& gen = lemma::vdc_numerator) {
    VerifyAllResult out;
    // a verifier that throws (e.g. a generator producing repeated points) counts as failed
    auto run = [&](const std::string& name, auto verifier) {
        lemma::VerificationReport r;
        try {
            r = verifier();
        } catch (const std::exception& e) {
            r = {name, "aborted", true, 0, 0, {}};
            r.fail({{"error", e.what()}});
        }
        out.all_passed = out.all_passed && r.all_passed;
        out.reports.push_back(std::move(r));
    };
    run("split-index", [&] { return lemma::verify_split_index(t_max, gen); });
    run("flip-order", [&] { return lemma::verify_flip_order_exhaustive(t_max); });
    run("element-matching", [&] { return lemma::verify_matchings(t_max); });
    run("self-similarity", [&] { return lemma::verify_self_similarity_range(t_max, gen); });
    run("main-lemma", [&] { return lemma::verify_main_lemma_range(n_max, gen); });
    run("shift-lemma", [&] { return lemma::verify_shift_lemma_range(n_max, gen); });
    run("fibonacci-approximation", [&] { return lemma::verify_fibonacci_facts(); });
    run("zeckendorf-remainder", [&] { return verify_zeckendorf(); });
    run("three-gap", [&] { return verify_three_gaps(n_max); });
    return out;
}

} // namespace stickbreak::experiments
