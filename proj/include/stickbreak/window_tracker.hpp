#pragma once

/**
 * @file window_tracker.hpp
 * @brief Min / max r-window sums maintained under point insertion.
 *
 * Sweeps over every n up to 10^5 cannot afford an O(n) pass per (n, r).
 * WindowTracker keeps, for a fixed set of widths m, the multiset of all
 * window sums W_m(i) = arc(p_i, p_{i+m}) as a sorted histogram.
 *
 * Inserting q into the gap after p_g only touches windows that contain that
 * gap. With Q the 2M points around the gap (Q[M-1] = p_g) and P their
 * unrolled cumulative positions, the width-m windows containing the gap are
 *
 *   S_m = { P[s+m] - P[s] : M-m <= s <= M-1 }.
 *
 * After insertion they are replaced by S_{m-1} (same endpoints, one more gap
 * inside) plus the two windows ending and starting at q. A width becomes
 * active once the circle holds m+1 points and is then built directly.
 */

#include "errors.hpp"
#include "point_models.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickbreak {

template <PointModel Model>
class WindowTracker {
public:
    using Point = typename Model::Point;
    using Length = typename Model::Length;

    WindowTracker(Model model, std::vector<std::uint64_t> widths)
        : model_(std::move(model)), points_(PointLess{&model_}), widths_(std::move(widths)) {
        std::sort(widths_.begin(), widths_.end());
        widths_.erase(std::unique(widths_.begin(), widths_.end()), widths_.end());
        if (widths_.empty() || widths_.front() < 1) throw InvalidWindow("WindowTracker: widths must be >= 1");
        reach_ = widths_.back();
        hist_.resize(widths_.size());
    }

    WindowTracker(const WindowTracker&) = delete;
    WindowTracker& operator=(const WindowTracker&) = delete;

    const Model& model() const { return model_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::uint64_t>& widths() const { return widths_; }

    /// Width m has windows once the circle holds m+1 points.
    bool active(std::uint64_t m) const { return m + 1 <= size(); }

    Length min_sum(std::uint64_t m) const { return histogram(m).front().length; }
    Length max_sum(std::uint64_t m) const { return histogram(m).back().length; }

    /// Sorted points, ascending from the smallest.
    std::vector<Point> sorted_points() const {
        std::vector<Point> out;
        out.reserve(points_.size());
        for (const auto& [p, idx] : points_) out.push_back(p);
        return out;
    }

    void insert(Point q, std::uint64_t index) {
        auto [it, fresh] = points_.emplace(q, index);
        if (!fresh)
            throw DuplicatePoint("WindowTracker: index " + std::to_string(index) + " coincides with index " +
                                 std::to_string(it->second));
        const std::size_t old_n = points_.size() - 1;
        if (old_n >= 2) update_neighbourhood(it, old_n);
        for (std::size_t w = 0; w < widths_.size(); ++w)
            if (widths_[w] == old_n) build_direct(w);  // active from now on: old_n + 1 = m + 1
    }

private:
    struct PointLess {
        const Model* model;
        bool operator()(const Point& a, const Point& b) const { return model->less(a, b); }
    };
    using Map = std::map<Point, std::uint64_t, PointLess>;
    struct HistEntry {
        std::int64_t key;
        Length length;
        std::int64_t count;
    };
    using Histogram = std::vector<HistEntry>;  // ascending lengths, counts > 0

    static constexpr bool kKeyed = requires(Length a) {
        { Model::key(a) } -> std::same_as<std::int64_t>;
    };

    const Histogram& histogram(std::uint64_t m) const {
        auto w = std::lower_bound(widths_.begin(), widths_.end(), m);
        if (w == widths_.end() || *w != m) throw InvalidWindow("WindowTracker: width not tracked");
        if (!active(m)) throw InvalidWindow("WindowTracker: width not active yet");
        return hist_[static_cast<std::size_t>(w - widths_.begin())];
    }

    typename Map::const_iterator circ_next(typename Map::const_iterator i) const {
        return ++i == points_.end() ? points_.begin() : i;
    }
    typename Map::const_iterator circ_prev(typename Map::const_iterator i) const {
        if (i == points_.begin()) i = points_.end();
        return --i;
    }

    static bool same_length(const Length& a, std::int64_t ka, const Length& b, std::int64_t kb) {
        if constexpr (kKeyed) return ka == kb;
        else return a == b;
    }

    void add(Histogram& h, const Length& length, std::int64_t key, std::int64_t count) {
        // histograms hold a handful of entries; equality scan before the ordered insert
        for (auto it = h.begin(); it != h.end(); ++it) {
            if (!same_length(it->length, it->key, length, key)) continue;
            it->count += count;
            if (it->count == 0) h.erase(it);
            else if (it->count < 0) throw std::logic_error("WindowTracker: negative window count");
            return;
        }
        if (count < 0) throw std::logic_error("WindowTracker: removing an absent window");
        auto pos = std::lower_bound(h.begin(), h.end(), length,
                                    [&](const HistEntry& e, const Length& k) { return model_.compare(e.length, k) < 0; });
        h.insert(pos, {key, length, count});
    }

    std::int64_t key_of(const Length& a) const {
        if constexpr (kKeyed) return Model::key(a);
        else return 0;
    }

    using TallyEntry = HistEntry;
    using Tally = std::vector<TallyEntry>;

    /// Tally of S_m for the current neighbourhood.
    void tally_straddling(std::uint64_t m, Tally& out) const {
        out.clear();
        if (m == 0) return;
        const std::size_t M = reach_;
        if constexpr (kKeyed) {
            // keys are additive, so a window's key is a difference of position keys;
            // one counting pass per distinct value (there are only a handful)
            const std::int64_t* hi = keys_.data() + M;
            const std::int64_t* lo = keys_.data() + M - m;
            std::int64_t covered = 0;
            std::size_t start = 0;
            while (covered < static_cast<std::int64_t>(m)) {
                while (true) {
                    const std::int64_t k = hi[start] - lo[start];
                    bool seen = false;
                    for (const auto& e : out) seen |= (e.key == k);
                    if (!seen) break;
                    ++start;
                }
                const std::int64_t k = hi[start] - lo[start];
                std::int64_t c = 0;
                for (std::size_t i = start; i < m; ++i) c += (hi[i] - lo[i] == k);
                const std::size_t s = M - m + start;
                out.push_back({k, model_.sub(pos_[s + m], pos_[s]), c});
                covered += c;
            }
        } else {
            for (std::size_t s = M - m; s < M; ++s) {
                Length v = model_.sub(pos_[s + m], pos_[s]);
                auto hit = std::find_if(out.begin(), out.end(), [&](const TallyEntry& e) { return e.length == v; });
                if (hit != out.end()) ++hit->count;
                else out.push_back({0, v, 1});
            }
        }
    }

    void update_neighbourhood(typename Map::const_iterator q_it, std::size_t old_n) {
        const std::size_t M = reach_;
        const Point q = q_it->first;
        // Q[M-1] = predecessor of q, walking the old circle (q itself skipped)
        ring_.assign(2 * M, Point{});
        auto g = circ_prev(q_it);
        auto cur = g;
        for (std::size_t k = 0; k < M; ++k) {
            ring_[M - 1 - k] = cur->first;
            cur = circ_prev(cur);
            if (cur == q_it) cur = circ_prev(cur);
        }
        cur = circ_next(q_it);
        for (std::size_t k = M; k < 2 * M; ++k) {
            ring_[k] = cur->first;
            cur = circ_next(cur);
            if (cur == q_it) cur = circ_next(cur);
        }
        pos_.assign(2 * M, Length{});
        for (std::size_t k = 1; k < 2 * M; ++k) pos_[k] = model_.add(pos_[k - 1], model_.arc(ring_[k - 1], ring_[k]));
        if constexpr (kKeyed) {
            keys_.resize(2 * M);
            for (std::size_t k = 0; k < 2 * M; ++k) keys_[k] = Model::key(pos_[k]);
        }
        const Length q_pos = model_.add(pos_[M - 1], model_.arc(ring_[M - 1], q));

        std::uint64_t tallied = 0;  // width whose tally sits in prev_
        bool have_prev = false;
        for (std::size_t w = 0; w < widths_.size(); ++w) {
            const std::uint64_t m = widths_[w];
            if (m > old_n - 1) break;  // inactive before this insertion
            Histogram& h = hist_[w];
            if (!(have_prev && tallied == m - 1)) tally_straddling(m - 1, prev_);
            tally_straddling(m, cur_);
            for (const auto& e : cur_) add(h, e.length, e.key, -e.count);
            for (const auto& e : prev_) add(h, e.length, e.key, e.count);
            const Length left = model_.sub(q_pos, pos_[M - m]);
            const Length right = model_.sub(pos_[M + m - 1], q_pos);
            add(h, left, key_of(left), 1);
            add(h, right, key_of(right), 1);
            std::swap(prev_, cur_);
            tallied = m;
            have_prev = true;
        }
    }

    void build_direct(std::size_t w) {
        const std::uint64_t m = widths_[w];
        std::vector<Point> pts = sorted_points();
        const std::size_t n = pts.size();
        Histogram& h = hist_[w];
        h.clear();
        Length sum = model_.arc(pts[0], pts[1 % n]);
        for (std::size_t k = 1; k < m; ++k) sum = model_.add(sum, model_.arc(pts[k % n], pts[(k + 1) % n]));
        for (std::size_t i = 0; i < n; ++i) {
            add(h, sum, key_of(sum), 1);
            sum = model_.sub(sum, model_.arc(pts[i], pts[(i + 1) % n]));
            sum = model_.add(sum, model_.arc(pts[(i + m) % n], pts[(i + m + 1) % n]));
        }
    }

    Model model_;
    Map points_;
    std::vector<std::uint64_t> widths_;
    std::uint64_t reach_ = 0;  // largest tracked width
    std::vector<Histogram> hist_;

    // scratch, reused across insertions
    std::vector<Point> ring_;
    std::vector<Length> pos_;
    std::vector<std::int64_t> keys_;
    Tally prev_, cur_;
};

/// Extreme counts over [x, x + r/n) read off tracked widths r-B..r+B.
/// Returns false when an extreme falls outside the tracked band; the caller
/// then runs the direct sweep.
template <PointModel Model>
bool counts_from_tracker(const WindowTracker<Model>& tracker, std::uint64_t r, std::uint64_t n, std::uint64_t band,
                         std::uint64_t& max_count, std::uint64_t& min_count) {
    const std::uint64_t N = tracker.size();
    const Ratio64 L{static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)};
    const auto& model = tracker.model();
    const std::uint64_t lo = r > band ? r - band : 1;
    const std::uint64_t hi = std::min<std::uint64_t>(r + band, N - 1);
    if (N < 2 || lo > hi) return false;
    // min W_m and max W_m are strictly increasing in m
    std::uint64_t below = lo - 1;  // widths with min W_m < L
    for (std::uint64_t m = lo; m <= hi; ++m) {
        if (model.compare(tracker.min_sum(m), L) < 0) below = m;
        else break;
    }
    if ((lo > 1 && below < lo) || (below == hi && hi < N - 1)) return false;
    std::uint64_t fits = lo - 1;  // widths with max W_m <= L
    for (std::uint64_t m = lo; m <= hi; ++m) {
        if (model.compare(tracker.max_sum(m), L) <= 0) fits = m;
        else break;
    }
    if ((lo > 1 && fits < lo) || (fits == hi && hi < N - 1)) return false;
    max_count = 1 + below;
    min_count = fits;
    return true;
}

} // namespace stickbreak
