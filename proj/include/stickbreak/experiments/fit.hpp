#pragma once

/**
 * @file fit.hpp
 * @brief Smallest constant c consistent with a table of sweep rows.
 *
 * Each row is mapped to the c-scale and c is the maximum over rows:
 *
 *   ratio_bound        (ratio - 1) * r / log r
 *   discrepancy_bound  max_abs_dev / log r
 *   paircorr_bound     |F_N(s) - 2s| / log s
 *
 * Rows with r = 1 (or s <= 1) carry no log term and are skipped. Taking the
 * maximum over every n in the table stands in for the limsup in n.
 */

#include "../circle_value.hpp"
#include "../errors.hpp"
#include "../reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stickbreak::experiments {

enum class FitQuantity { RatioBound, DiscrepancyBound, PaircorrBound };

inline std::string to_string(FitQuantity q) {
    switch (q) {
    case FitQuantity::RatioBound: return "ratio_bound";
    case FitQuantity::DiscrepancyBound: return "discrepancy_bound";
    case FitQuantity::PaircorrBound: return "paircorr_bound";
    }
    return {};
}

inline FitQuantity parse_fit_quantity(std::string_view s) {
    if (s == "ratio_bound" || s == "ratio") return FitQuantity::RatioBound;
    if (s == "discrepancy_bound" || s == "discrepancy") return FitQuantity::DiscrepancyBound;
    if (s == "paircorr_bound" || s == "paircorr") return FitQuantity::PaircorrBound;
    throw std::invalid_argument("unknown fit quantity '" + std::string(s) + "'");
}

struct FitResult {
    FitQuantity quantity = FitQuantity::RatioBound;
    double fitted_c = 0;
    std::vector<double> r_values;   // distinct r (or s) used, ascending
    std::vector<double> per_r;      // max over rows at that r, on the c-scale
    std::vector<double> residuals;  // fitted_c - per_r, all >= 0
    std::uint64_t n_max = 0;
};

/// x - 1 for a ratio value, exact before rounding.
inline double ratio_excess(const Value& ratio) {
    if (auto r = std::get_if<Rational>(&ratio)) return (*r - Rational(1)).to_double();
    if (auto g = std::get_if<GoldenNumber>(&ratio)) return (*g - GoldenNumber(Rational(1))).to_double();
    return static_cast<double>(std::get<FloatValue>(ratio).value - 1);
}

namespace detail {

inline FitResult finish_fit(FitQuantity q, const std::map<double, double>& per_r, std::uint64_t n_max,
                            std::size_t min_distinct_r) {
    if (per_r.size() < min_distinct_r)
        throw InsufficientData("fit_constant: " + std::to_string(per_r.size()) + " distinct r with log term, need " +
                               std::to_string(min_distinct_r));
    FitResult fit;
    fit.quantity = q;
    fit.n_max = n_max;
    for (auto [r, v] : per_r) {
        fit.r_values.push_back(r);
        fit.per_r.push_back(v);
        fit.fitted_c = std::max(fit.fitted_c, v);
    }
    for (double v : fit.per_r) fit.residuals.push_back(fit.fitted_c - v);
    return fit;
}

inline void keep_max(std::map<double, double>& m, double r, double v) {
    auto [it, fresh] = m.emplace(r, v);
    if (!fresh) it->second = std::max(it->second, v);
}

} // namespace detail

inline FitResult fit_constant(const std::vector<WindowReport>& rows, std::size_t min_distinct_r = 3) {
    std::map<double, double> per_r;
    std::uint64_t n_max = 0;
    for (const auto& w : rows) {
        n_max = std::max(n_max, w.n);
        if (w.r < 2) continue;
        const double r = static_cast<double>(w.r);
        detail::keep_max(per_r, r, ratio_excess(w.ratio) * r / std::log(r));
    }
    return detail::finish_fit(FitQuantity::RatioBound, per_r, n_max, min_distinct_r);
}

inline FitResult fit_constant(const std::vector<DiscrepancyReport>& rows, std::size_t min_distinct_r = 3) {
    std::map<double, double> per_r;
    std::uint64_t n_max = 0;
    for (const auto& d : rows) {
        n_max = std::max(n_max, d.n);
        if (d.r < 2) continue;
        const double r = static_cast<double>(d.r);
        detail::keep_max(per_r, r, static_cast<double>(d.max_abs_dev) / std::log(r));
    }
    return detail::finish_fit(FitQuantity::DiscrepancyBound, per_r, n_max, min_distinct_r);
}

inline FitResult fit_constant(const std::vector<PairCorrelationReport>& rows, std::size_t min_distinct_r = 3) {
    std::map<double, double> per_r;
    std::uint64_t n_max = 0;
    for (const auto& p : rows) {
        n_max = std::max(n_max, p.N);
        const double s = to_double(p.s);
        if (s <= 1) continue;
        const double dev = std::fabs(p.value.to_double() - 2 * s);
        detail::keep_max(per_r, s, dev / std::log(s));
    }
    return detail::finish_fit(FitQuantity::PaircorrBound, per_r, n_max, min_distinct_r);
}

inline nlohmann::json to_json(const FitResult& f) {
    return {{"quantity", to_string(f.quantity)}, {"fitted_c", f.fitted_c}, {"r_values", f.r_values},
            {"per_r", f.per_r},                  {"residuals", f.residuals}, {"n_max", f.n_max}};
}

} // namespace stickbreak::experiments
