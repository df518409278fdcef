#pragma once

/**
 * @file sequence.hpp
 * @brief Sequence generators and sorted prefixes.
 *
 * sequence_point() returns the m-th element of a sequence as a CircleValue.
 * build_prefix() generates x_1..x_n (plus x_0 = 0 when requested), sorts
 * them with the model's exact comparator and remembers which sequence index
 * sits at each sorted position (0 is the origin).
 */

#include "circle_value.hpp"
#include "errors.hpp"
#include "golden.hpp"
#include "point_models.hpp"
#include "radical_inverse.hpp"
#include "sequence_kind.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <variant>
#include <vector>

namespace stickbreak {

inline CircleValue sequence_point(const SequenceKind& kind, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("sequence_point: m must be >= 1");
    switch (kind.tag) {
    case SequenceKind::Tag::VanDerCorput: return CircleValue(radical_inverse(m, kind.base));
    case SequenceKind::Tag::KroneckerGolden: return CircleValue(golden_frac(static_cast<std::int64_t>(m)));
    case SequenceKind::Tag::DeBruijnErdosLog: {
        LogModel model;
        return CircleValue(model.point_value(model.point(m)));
    }
    }
    throw std::logic_error("sequence_point: unhandled kind");
}

/// Point ties closer than this make the float ordering untrustworthy.
inline const __float128 kPrecisionTieThreshold = scalbnq(static_cast<__float128>(1), -50);

template <PointModel Model>
struct Prefix {
    using Point = typename Model::Point;

    SequenceKind kind;
    Model model;
    std::uint64_t n = 0;
    bool include_origin = false;
    std::vector<Point> points;               // strictly increasing in [0,1)
    std::vector<std::uint64_t> index_map;    // sequence index per sorted position
    bool precision_warning = false;          // float kinds only

    std::size_t size() const { return points.size(); }
    CircleValue value(std::size_t pos) const { return CircleValue(model.point_value(points[pos])); }
};

template <PointModel Model>
Prefix<Model> build_prefix(const SequenceKind& kind, const Model& model, std::uint64_t n, bool include_origin) {
    if (n < 1) throw std::invalid_argument("build_prefix: n must be >= 1");
    using Point = typename Model::Point;
    std::vector<std::pair<Point, std::uint64_t>> items;
    items.reserve(n + 1);
    if (include_origin) items.emplace_back(model.origin(), 0);
    for (std::uint64_t m = 1; m <= n; ++m) items.emplace_back(model.point(m), m);
    std::sort(items.begin(), items.end(),
              [&](const auto& x, const auto& y) { return model.less(x.first, y.first); });

    Prefix<Model> prefix{kind, model, n, include_origin, {}, {}, false};
    prefix.points.reserve(items.size());
    prefix.index_map.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0 && !model.less(items[i - 1].first, items[i].first))
            throw DuplicatePoint("build_prefix: indices " + std::to_string(items[i - 1].second) + " and " +
                                 std::to_string(items[i].second) + " coincide");
        if constexpr (!Model::is_exact) {
            if (i > 0 && items[i].first - items[i - 1].first < kPrecisionTieThreshold)
                prefix.precision_warning = true;
        }
        prefix.points.push_back(items[i].first);
        prefix.index_map.push_back(items[i].second);
    }
    if constexpr (!Model::is_exact) {
        if (prefix.points.size() > 1 &&
            model.arc(prefix.points.back(), prefix.points.front()) < kPrecisionTieThreshold)
            prefix.precision_warning = true;
    }
    return prefix;
}

using AnyModel = std::variant<RadixModel, GoldenModel, LogModel>;
using AnyPrefix = std::variant<Prefix<RadixModel>, Prefix<GoldenModel>, Prefix<LogModel>>;

/// Model able to represent x_1 .. x_{n_max} of the given kind.
inline AnyModel model_for(const SequenceKind& kind, std::uint64_t n_max) {
    switch (kind.tag) {
    case SequenceKind::Tag::VanDerCorput: return RadixModel::for_count(kind.base, n_max);
    case SequenceKind::Tag::KroneckerGolden: return GoldenModel{};
    case SequenceKind::Tag::DeBruijnErdosLog: return LogModel{};
    }
    throw std::logic_error("model_for: unhandled kind");
}

inline AnyPrefix build_prefix(const SequenceKind& kind, std::uint64_t n, bool include_origin) {
    return std::visit([&](const auto& model) -> AnyPrefix { return build_prefix(kind, model, n, include_origin); },
                      model_for(kind, n));
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// CSV: sorted_pos,seq_index,value_exact,value_float
template <PointModel Model>
void write_prefix_csv(std::ostream& os, const Prefix<Model>& prefix) {
    os << "sorted_pos,seq_index,value_exact,value_float\n";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        Value v = prefix.model.point_value(prefix.points[i]);
        os << i << ',' << prefix.index_map[i] << ',' << to_string(v) << ',' << format_double(to_double(v))
           << '\n';
    }
}

} // namespace stickbreak
