#pragma once

/**
 * @file reports.hpp
 * @brief Report records and their CSV / JSON forms.
 *
 * Exact values are serialized as strings ("p/q", "(p)+(q)sqrt5") so a file
 * parses back to the same rows. CSV headers:
 *
 *   windows      kind,n,r,min_sum,max_sum,ratio_float
 *   discrepancy  kind,n,r,max_count,min_count,max_abs_dev
 *   paircorr     kind,N,s,F_value
 */

#include "circle_value.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickbreak {

struct WindowReport {
    std::string kind;
    std::uint64_t n = 0;       // sequence elements in the prefix
    std::uint64_t r = 0;       // window width in gaps
    Value min_sum;
    std::optional<std::size_t> min_pos;  // sorted position of the window's first point
    Value max_sum;
    std::optional<std::size_t> max_pos;
    Value ratio;               // max_sum / min_sum
    double ratio_float = 0;

    friend bool operator==(const WindowReport&, const WindowReport&) = default;
};

struct DiscrepancyReport {
    std::string kind;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::uint64_t max_count = 0;
    std::uint64_t min_count = 0;
    std::uint64_t max_abs_dev = 0;

    friend bool operator==(const DiscrepancyReport&, const DiscrepancyReport&) = default;
};

struct PairCorrelationReport {
    std::string kind;
    std::uint64_t N = 0;
    Value s;
    Rational value;  // F_N(s)

    friend bool operator==(const PairCorrelationReport&, const PairCorrelationReport&) = default;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline std::uint64_t parse_u64(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
    return v;
}

inline double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

inline std::string double_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class Row, class ParseRow>
std::vector<Row> read_csv(std::istream& in, const std::string& header, std::size_t columns, ParseRow parse_row) {
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw std::invalid_argument("CSV: expected header '" + header + "'");
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != columns) throw std::invalid_argument("CSV: wrong column count in '" + line + "'");
        rows.push_back(parse_row(cells));
    }
    return rows;
}

} // namespace detail

// ---- windows -------------------------------------------------------------

inline const char* kWindowsHeader = "kind,n,r,min_sum,max_sum,ratio_float";

inline void write_windows_csv_header(std::ostream& os) { os << kWindowsHeader << '\n'; }

inline void write_windows_csv_row(std::ostream& os, const WindowReport& w) {
    os << w.kind << ',' << w.n << ',' << w.r << ',' << to_string(w.min_sum) << ',' << to_string(w.max_sum) << ','
       << detail::double_text(w.ratio_float) << '\n';
}

/// Positions are not part of the CSV schema and come back empty. The exact
/// ratio is recomputed from the two sums.
inline std::vector<WindowReport> read_windows_csv(std::istream& in) {
    return detail::read_csv<WindowReport>(in, kWindowsHeader, 6, [](const std::vector<std::string>& c) {
        WindowReport w;
        w.kind = c[0];
        w.n = detail::parse_u64(c[1]);
        w.r = detail::parse_u64(c[2]);
        w.min_sum = parse_value(c[3]);
        w.max_sum = parse_value(c[4]);
        w.ratio_float = detail::parse_double(c[5]);
        if (is_exact(w.min_sum) && is_exact(w.max_sum)) {
            if (std::holds_alternative<Rational>(w.min_sum) && std::holds_alternative<Rational>(w.max_sum))
                w.ratio = std::get<Rational>(w.max_sum) / std::get<Rational>(w.min_sum);
            else
                w.ratio = to_golden(w.max_sum) / to_golden(w.min_sum);
        } else {
            w.ratio = FloatValue{to_quad(w.max_sum) / to_quad(w.min_sum), 0};
        }
        return w;
    });
}

inline nlohmann::json to_json(const WindowReport& w) {
    nlohmann::json j = {{"kind", w.kind},
                        {"n", w.n},
                        {"r", w.r},
                        {"min_sum", to_string(w.min_sum)},
                        {"max_sum", to_string(w.max_sum)},
                        {"ratio", to_string(w.ratio)},
                        {"ratio_float", w.ratio_float}};
    if (w.min_pos) j["min_pos"] = *w.min_pos;
    if (w.max_pos) j["max_pos"] = *w.max_pos;
    return j;
}

inline WindowReport window_report_from_json(const nlohmann::json& j) {
    WindowReport w;
    w.kind = j.at("kind").get<std::string>();
    w.n = j.at("n").get<std::uint64_t>();
    w.r = j.at("r").get<std::uint64_t>();
    w.min_sum = parse_value(j.at("min_sum").get<std::string>());
    if (j.contains("min_pos")) w.min_pos = j.at("min_pos").get<std::size_t>();
    w.max_sum = parse_value(j.at("max_sum").get<std::string>());
    if (j.contains("max_pos")) w.max_pos = j.at("max_pos").get<std::size_t>();
    w.ratio = parse_value(j.at("ratio").get<std::string>());
    w.ratio_float = j.at("ratio_float").get<double>();
    return w;
}

// ---- discrepancy -----------------------------------------------------------

inline const char* kDiscrepancyHeader = "kind,n,r,max_count,min_count,max_abs_dev";

inline void write_discrepancy_csv_header(std::ostream& os) { os << kDiscrepancyHeader << '\n'; }

inline void write_discrepancy_csv_row(std::ostream& os, const DiscrepancyReport& d) {
    os << d.kind << ',' << d.n << ',' << d.r << ',' << d.max_count << ',' << d.min_count << ',' << d.max_abs_dev
       << '\n';
}

inline std::vector<DiscrepancyReport> read_discrepancy_csv(std::istream& in) {
    return detail::read_csv<DiscrepancyReport>(in, kDiscrepancyHeader, 6, [](const std::vector<std::string>& c) {
        return DiscrepancyReport{c[0],
                                 detail::parse_u64(c[1]),
                                 detail::parse_u64(c[2]),
                                 detail::parse_u64(c[3]),
                                 detail::parse_u64(c[4]),
                                 detail::parse_u64(c[5])};
    });
}

inline nlohmann::json to_json(const DiscrepancyReport& d) {
    return {{"kind", d.kind},           {"n", d.n},
            {"r", d.r},                 {"max_count", d.max_count},
            {"min_count", d.min_count}, {"max_abs_dev", d.max_abs_dev}};
}

inline DiscrepancyReport discrepancy_report_from_json(const nlohmann::json& j) {
    return {j.at("kind").get<std::string>(),       j.at("n").get<std::uint64_t>(),
            j.at("r").get<std::uint64_t>(),        j.at("max_count").get<std::uint64_t>(),
            j.at("min_count").get<std::uint64_t>(), j.at("max_abs_dev").get<std::uint64_t>()};
}

// ---- pair correlation ------------------------------------------------------

inline const char* kPairCorrelationHeader = "kind,N,s,F_value";

inline void write_paircorr_csv_header(std::ostream& os) { os << kPairCorrelationHeader << '\n'; }

inline void write_paircorr_csv_row(std::ostream& os, const PairCorrelationReport& p) {
    os << p.kind << ',' << p.N << ',' << to_string(p.s) << ',' << p.value.to_string() << '\n';
}

inline std::vector<PairCorrelationReport> read_paircorr_csv(std::istream& in) {
    return detail::read_csv<PairCorrelationReport>(
        in, kPairCorrelationHeader, 4, [](const std::vector<std::string>& c) {
            return PairCorrelationReport{c[0], detail::parse_u64(c[1]), parse_value(c[2]), Rational::parse(c[3])};
        });
}

inline nlohmann::json to_json(const PairCorrelationReport& p) {
    return {{"kind", p.kind}, {"N", p.N}, {"s", to_string(p.s)}, {"F_value", p.value.to_string()},
            {"F_float", p.value.to_double()}};
}

inline PairCorrelationReport paircorr_report_from_json(const nlohmann::json& j) {
    return {j.at("kind").get<std::string>(), j.at("N").get<std::uint64_t>(),
            parse_value(j.at("s").get<std::string>()), Rational::parse(j.at("F_value").get<std::string>())};
}

} // namespace stickbreak
