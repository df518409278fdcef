#pragma once

/**
 * @file sweep.hpp
 * @brief Statistics over many (n, r) pairs.
 *
 * Two evaluation routes give identical rows:
 *   direct   build the prefix for each n and run the O(n) statistic per r
 *   tracked  insert points one at a time into a WindowTracker and read the
 *            extremes for every n on the way
 * The cheaper route is picked from a cost estimate. Rows come back in
 * (n, r) order from the config regardless of the worker count.
 */

#include "../circle_stats.hpp"
#include "../errors.hpp"
#include "../reports.hpp"
#include "../sequence.hpp"
#include "../window_tracker.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace stickbreak::experiments {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    SequenceKind kind;
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> r_values;
    bool include_origin = true;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // empty: standard output
    unsigned jobs = 1;

    /// Sorts and deduplicates both lists, then checks the invariants.
    void validate() {
        auto tidy = [](std::vector<std::uint64_t>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        tidy(n_values);
        tidy(r_values);
        if (n_values.empty()) throw std::invalid_argument("sweep: n_values is empty");
        if (r_values.empty()) throw std::invalid_argument("sweep: r_values is empty");
        if (r_values.front() < 1) throw InvalidWindow("sweep: r must be >= 1");
        if (r_values.back() >= n_values.front())
            throw InvalidWindow("sweep: every r must be below min(n) = " + std::to_string(n_values.front()));
        if (jobs < 1) jobs = 1;
    }
};

/// Half-width of the tracked band around each r in discrepancy sweeps.
inline constexpr std::uint64_t kDiscrepancyBand = 12;

namespace detail {

/// Runs task(i) for i in [0, count) on `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::size_t next = 0;
    std::mutex lock;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> g(lock);
                    if (next >= count || error) return;
                    i = next++;
                }
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Splits sorted widths into `parts` groups of roughly equal total width.
inline std::vector<std::vector<std::uint64_t>> split_widths(const std::vector<std::uint64_t>& r_values,
                                                            unsigned parts) {
    parts = std::max(1u, std::min<unsigned>(parts, static_cast<unsigned>(r_values.size())));
    const double total = std::accumulate(r_values.begin(), r_values.end(), 0.0);
    std::vector<std::vector<std::uint64_t>> out(parts);
    double acc = 0;
    for (std::uint64_t r : r_values) {
        auto slot = static_cast<unsigned>(acc / total * parts);
        out[std::min(slot, parts - 1)].push_back(r);
        acc += static_cast<double>(r);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& v) { return v.empty(); }), out.end());
    return out;
}

/// Direct: one O(n) pass per (n, r). Tracked: every insertion touches about
/// `touched_per_r * r` windows for each r.
inline bool prefer_tracker(const SweepConfig& cfg, double touched_per_r) {
    double direct = 0;
    for (std::uint64_t n : cfg.n_values) direct += static_cast<double>(n + 1) * static_cast<double>(cfg.r_values.size());
    double tracked = 0;
    for (std::uint64_t r : cfg.r_values) tracked += touched_per_r * static_cast<double>(r);
    tracked *= static_cast<double>(cfg.n_values.back());
    return tracked < direct;
}

template <PointModel Model>
WindowReport tracked_window_row(const WindowTracker<Model>& t, const SequenceKind& kind, std::uint64_t n,
                                std::uint64_t r) {
    const auto& m = t.model();
    WindowReport w;
    w.kind = kind.to_string();
    w.n = n;
    w.r = r;
    w.min_sum = m.length_value(t.min_sum(r));
    w.max_sum = m.length_value(t.max_sum(r));
    w.ratio = m.ratio_value(t.max_sum(r), t.min_sum(r));
    w.ratio_float = to_double(w.ratio);
    return w;
}

} // namespace detail

/// Calls visit(n, tracker) for n = 1 .. n_max after x_n is inserted.
template <PointModel Model>
void scan_prefixes(const Model& model, std::uint64_t n_max, bool include_origin, const std::vector<std::uint64_t>& widths,
                   const std::function<void(std::uint64_t, const WindowTracker<Model>&)>& visit) {
    WindowTracker<Model> tracker(model, widths);
    if (include_origin) tracker.insert(model.origin(), 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        tracker.insert(model.point(n), n);
        visit(n, tracker);
    }
}

/// Tracked discrepancy for the given r at every n in [r+1, n_max], wrapping
/// intervals, origin excluded. visit(n, report) is called in (n, r) order.
template <PointModel Model>
void scan_discrepancy(const SequenceKind& kind, const Model& model, std::uint64_t n_max,
                      const std::vector<std::uint64_t>& r_values,
                      const std::function<void(const DiscrepancyReport&)>& visit,
                      std::uint64_t band = kDiscrepancyBand, std::uint64_t* fallbacks = nullptr) {
    std::vector<std::uint64_t> widths;
    for (std::uint64_t r : r_values)
        for (std::uint64_t m = (r > band ? r - band : 1); m <= r + band; ++m) widths.push_back(m);
    const std::string name = kind.to_string();
    scan_prefixes<Model>(model, n_max, false, widths, [&](std::uint64_t n, const WindowTracker<Model>& t) {
        std::vector<typename Model::Point> sorted;
        for (std::uint64_t r : r_values) {
            if (r >= n) continue;
            std::uint64_t hi = 0, lo = 0;
            if (!counts_from_tracker(t, r, n, band, hi, lo)) {
                if (sorted.empty()) sorted = t.sorted_points();
                const auto c = circular_count_extremes(
                    model, std::span<const typename Model::Point>(sorted),
                    Ratio64{static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)});
                hi = c.max_count;
                lo = c.min_count;
                if (fallbacks) ++*fallbacks;
            }
            auto dev = [r](std::uint64_t v) { return v > r ? v - r : r - v; };
            visit(DiscrepancyReport{name, n, r, hi, lo, std::max(dev(hi), dev(lo))});
        }
    });
}

/// WindowReport rows for every (n, r) in the config.
inline std::vector<WindowReport> run_ratio_sweep(SweepConfig cfg) {
    cfg.validate();
    return std::visit(
        [&](const auto& model) {
            using Model = std::decay_t<decltype(model)>;
            std::vector<WindowReport> rows(cfg.n_values.size() * cfg.r_values.size());
            const std::size_t R = cfg.r_values.size();
            auto slot = [&](std::size_t ni, std::size_t ri) -> WindowReport& { return rows[ni * R + ri]; };
            if (Model::is_exact && detail::prefer_tracker(cfg, 4.0)) {
                const auto groups = detail::split_widths(cfg.r_values, cfg.jobs);
                detail::parallel_for(groups.size(), cfg.jobs, [&](std::size_t gi) {
                    const auto& widths = groups[gi];
                    std::size_t ni = 0;
                    scan_prefixes<Model>(model, cfg.n_values.back(), cfg.include_origin, widths,
                                         [&](std::uint64_t n, const WindowTracker<Model>& t) {
                                             if (ni >= cfg.n_values.size() || cfg.n_values[ni] != n) return;
                                             for (std::uint64_t r : widths) {
                                                 auto ri = static_cast<std::size_t>(
                                                     std::lower_bound(cfg.r_values.begin(), cfg.r_values.end(), r) -
                                                     cfg.r_values.begin());
                                                 slot(ni, ri) = detail::tracked_window_row(t, cfg.kind, n, r);
                                             }
                                             ++ni;
                                         });
                });
            } else {
                detail::parallel_for(cfg.n_values.size(), cfg.jobs, [&](std::size_t ni) {
                    const auto prefix = build_prefix(cfg.kind, model, cfg.n_values[ni], cfg.include_origin);
                    const auto gaps = gap_vector(prefix);
                    for (std::size_t ri = 0; ri < R; ++ri) slot(ni, ri) = window_extremes(gaps, cfg.r_values[ri]);
                });
            }
            return rows;
        },
        model_for(cfg.kind, cfg.n_values.back()));
}

/// DiscrepancyReport rows for every (n, r) in the config. The origin flag is
/// ignored: sequence points only. `wrap = false` forces the direct route.
inline std::vector<DiscrepancyReport> run_discrepancy_sweep(SweepConfig cfg, bool wrap = true) {
    cfg.validate();
    return std::visit(
        [&](const auto& model) {
            using Model = std::decay_t<decltype(model)>;
            const std::size_t R = cfg.r_values.size();
            std::vector<DiscrepancyReport> rows(cfg.n_values.size() * R);
            if (Model::is_exact && wrap && detail::prefer_tracker(cfg, 4.0 * (2 * kDiscrepancyBand + 1))) {
                const auto groups = detail::split_widths(cfg.r_values, cfg.jobs);
                detail::parallel_for(groups.size(), cfg.jobs, [&](std::size_t gi) {
                    scan_discrepancy<Model>(cfg.kind, model, cfg.n_values.back(), groups[gi],
                                            [&](const DiscrepancyReport& d) {
                                                auto ni = std::lower_bound(cfg.n_values.begin(), cfg.n_values.end(), d.n);
                                                if (ni == cfg.n_values.end() || *ni != d.n) return;
                                                auto ri = std::lower_bound(cfg.r_values.begin(), cfg.r_values.end(), d.r);
                                                rows[static_cast<std::size_t>(ni - cfg.n_values.begin()) * R +
                                                     static_cast<std::size_t>(ri - cfg.r_values.begin())] = d;
                                            });
                });
            } else {
                detail::parallel_for(cfg.n_values.size(), cfg.jobs, [&](std::size_t ni) {
                    const auto prefix = build_prefix(cfg.kind, model, cfg.n_values[ni], false);
                    for (std::size_t ri = 0; ri < R; ++ri)
                        rows[ni * R + ri] = local_discrepancy(prefix, cfg.r_values[ri], wrap);
                });
            }
            return rows;
        },
        model_for(cfg.kind, cfg.n_values.back()));
}

/// F_N(s) for every N in n_values and s in s_values; origin excluded.
inline std::vector<PairCorrelationReport> run_paircorr_sweep(const SequenceKind& kind,
                                                             std::vector<std::uint64_t> n_values,
                                                             const std::vector<Value>& s_values, unsigned jobs = 1) {
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
    if (n_values.empty() || s_values.empty()) throw std::invalid_argument("paircorr sweep: empty N or s list");
    const std::size_t S = s_values.size();
    std::vector<PairCorrelationReport> rows(n_values.size() * S);
    detail::parallel_for(n_values.size(), jobs, [&](std::size_t ni) {
        std::visit(
            [&](const auto& prefix) {
                for (std::size_t si = 0; si < S; ++si) rows[ni * S + si] = pair_correlation(prefix, s_values[si]);
            },
            build_prefix(kind, n_values[ni], false));
    });
    return rows;
}

} // namespace stickbreak::experiments
