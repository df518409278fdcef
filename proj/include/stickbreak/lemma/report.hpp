#pragma once

/**
 * @file report.hpp
 * @brief Outcome of one exhaustive verifier run.
 *
 * JSON shape: {lemma, parameter_range, all_passed, counterexamples: [...]}.
 * Counterexample lists are capped; `failures` keeps the full count.
 */

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stickbreak::lemma {

struct VerificationReport {
    std::string lemma;
    std::string parameter_range;
    bool all_passed = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<nlohmann::json> counterexamples;

    static constexpr std::size_t kMaxCounterexamples = 20;

    void fail(nlohmann::json detail) {
        all_passed = false;
        ++failures;
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(detail));
    }
};

inline nlohmann::json to_json(const VerificationReport& r) {
    return {{"lemma", r.lemma},
            {"parameter_range", r.parameter_range},
            {"all_passed", r.all_passed},
            {"checked", r.checked},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples}};
}

inline VerificationReport verification_report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.lemma = j.at("lemma").get<std::string>();
    r.parameter_range = j.at("parameter_range").get<std::string>();
    r.all_passed = j.at("all_passed").get<bool>();
    r.checked = j.value("checked", std::uint64_t{0});
    r.failures = j.value("failures", std::uint64_t{0});
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(c);
    return r;
}

} // namespace stickbreak::lemma
