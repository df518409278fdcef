#include "oracles.hpp"

#include <stickbreak/circle_stats.hpp>
#include <stickbreak/window_tracker.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace stickbreak;

namespace {

Prefix<RadixModel> vdc(std::uint64_t n, bool origin) {
    return build_prefix(SequenceKind::van_der_corput(2), RadixModel::for_count(2, n), n, origin);
}
Prefix<GoldenModel> kron(std::uint64_t n, bool origin) {
    return build_prefix(SequenceKind::kronecker_golden(), GoldenModel{}, n, origin);
}

// circle scaled so that r/n and every midpoint are integral
oracle::Circle oracle_circle(const SequenceKind& kind, std::uint64_t n, bool origin) {
    const oracle::i128 unit = 2 * static_cast<oracle::i128>(n);
    return kind == SequenceKind::kronecker_golden() ? oracle::golden_circle(n, origin, unit)
                                                    : oracle::dyadic_circle(n, origin, unit);
}

} // namespace

TEST(GapVector, ListedCases) {
    auto g3 = gap_vector(vdc(3, true));
    ASSERT_EQ(g3.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(g3.model.length_value(g3.gaps[i]), Value(Rational(1, 4)));

    auto g4 = gap_vector(vdc(4, true));
    const Rational expect[] = {Rational(1, 8), Rational(1, 8), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
    ASSERT_EQ(g4.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(g4.model.length_value(g4.gaps[i]), Value(expect[i]));
}

TEST(GapVector, GoldenPairWithAndWithoutOrigin) {
    // {2phi} = sqrt5 - 2, {phi} - {2phi} = 2 - phi... exact subtraction oracle
    const GoldenNumber a = golden_frac(2), b = golden_frac(1), one(Rational(1));
    auto without = gap_vector(kron(2, false));
    ASSERT_EQ(without.size(), 2u);
    EXPECT_EQ(without.model.length_value(without.gaps[0]), Value(b - a));
    EXPECT_EQ(without.model.length_value(without.gaps[1]), Value(one - b + a));
    auto with = gap_vector(kron(2, true));
    ASSERT_EQ(with.size(), 3u);
    EXPECT_EQ(with.model.length_value(with.gaps[0]), Value(a));
    EXPECT_EQ(with.model.length_value(with.gaps[1]), Value(b - a));
    EXPECT_EQ(with.model.length_value(with.gaps[2]), Value(one - b));
}

TEST(GapVectorProperty, ExactSumIsOneAndGapsPositive) {
    for (std::uint64_t n = 1; n <= 10000; n += (n < 300 ? 1 : 311)) {
        for (bool origin : {false, true}) {
            auto gv = gap_vector(vdc(n, origin));
            ASSERT_EQ(gv.model.length_value(gv.total), Value(Rational(1)));
            auto gk = gap_vector(kron(n, origin));
            ASSERT_EQ(to_golden(gk.model.length_value(gk.total)), GoldenNumber(Rational(1)));
            for (const auto& x : gk.gaps) ASSERT_GT(GoldenModel::sign(x), 0);
        }
    }
}

TEST(WindowExtremes, ListedCases) {
    auto w = window_extremes(gap_vector(vdc(4, true)), 1);
    EXPECT_EQ(w.min_sum, Value(Rational(1, 8)));
    EXPECT_EQ(w.max_sum, Value(Rational(1, 4)));
    EXPECT_EQ(w.ratio, Value(Rational(2)));

    auto spot = window_extremes(gap_vector(vdc(660, true)), 53);
    EXPECT_EQ(spot.min_sum, Value(Rational(5, 64)));
    EXPECT_EQ(spot.min_pos, 0u);

    for (std::uint64_t r = 1; r <= 15; ++r) EXPECT_EQ(window_extremes(gap_vector(vdc(15, true)), r).ratio, Value(Rational(1)));
}

TEST(WindowExtremes, RejectsOutOfRangeWidths) {
    auto g = gap_vector(vdc(10, true));
    EXPECT_THROW(window_extremes(g, 0), InvalidWindow);
    EXPECT_THROW(window_extremes(g, 12), InvalidWindow);
    EXPECT_NO_THROW(window_extremes(g, 11));
}

TEST(WindowExtremesProperty, MatchesBruteForce) {
    for (auto kind : {SequenceKind::van_der_corput(2), SequenceKind::kronecker_golden()})
        for (std::uint64_t n = 1; n <= 512; n += (n < 64 ? 1 : 29))
            for (bool origin : {false, true}) {
                const auto c = oracle_circle(kind, n, origin);
                std::visit(
                    [&](const auto& p) {
                        const auto g = gap_vector(p);
                        for (std::uint64_t r = 1; r <= g.size(); r += (r < 40 ? 1 : 17)) {
                            const auto w = window_extremes(g, r);
                            const auto o = oracle::window_extremes(c, r);
                            ASSERT_TRUE(compare(w.min_sum, oracle::to_value(o.min, c.U)) == 0) << n << " " << r;
                            ASSERT_TRUE(compare(w.max_sum, oracle::to_value(o.max, c.U)) == 0) << n << " " << r;
                            ASSERT_TRUE(compare(w.ratio, Value(Rational(1))) >= 0);
                        }
                    },
                    build_prefix(kind, n, origin));
            }
}

TEST(LocalDiscrepancy, EquispacedLevelWithUnitWindow) {
    for (unsigned k = 2; k <= 10; ++k) {
        const std::uint64_t n = (std::uint64_t{1} << k) - 1;
        const auto d = local_discrepancy(vdc(n, false), 1);
        EXPECT_LE(d.max_count, 2u);
        EXPECT_GE(d.max_count, 1u);
        EXPECT_LE(d.min_count, 1u);
        EXPECT_LE(d.max_abs_dev, 1u);
    }
}

TEST(LocalDiscrepancy, SixHundredSixtyAgainstEndpointEnumeration) {
    const auto d = local_discrepancy(vdc(660, false), 8);
    const auto c = oracle_circle(SequenceKind::van_der_corput(2), 660, false);
    const auto o = oracle::count_extremes(c, c.U * 8 / 660);
    EXPECT_EQ(d.max_count, o.max_count);
    EXPECT_EQ(d.min_count, o.min_count);
    EXPECT_EQ(d.max_abs_dev, 2u);  // frozen from the oracle
}

TEST(LocalDiscrepancy, RejectsWidthsAtOrAboveN) {
    EXPECT_THROW(local_discrepancy(vdc(10, false), 10), InvalidWindow);
    EXPECT_THROW(local_discrepancy(vdc(10, false), 0), InvalidWindow);
}

TEST(LocalDiscrepancyProperty, MatchesBruteForce) {
    for (auto kind : {SequenceKind::van_der_corput(2), SequenceKind::kronecker_golden()})
        for (std::uint64_t n = 2; n <= 512; n += (n < 48 ? 1 : 37))
            for (bool origin : {false, true}) {
                const auto c = oracle_circle(kind, n, origin);
                std::visit(
                    [&](const auto& p) {
                        for (std::uint64_t r = 1; r <= 32 && r < n; ++r) {
                            const auto d = local_discrepancy(p, r);
                            const auto o = oracle::count_extremes(c, c.U * static_cast<oracle::i128>(r) /
                                                                         static_cast<oracle::i128>(n));
                            ASSERT_EQ(d.max_count, o.max_count) << n << " " << r;
                            ASSERT_EQ(d.min_count, o.min_count) << n << " " << r;
                        }
                    },
                    build_prefix(kind, n, origin));
            }
}

TEST(LocalDiscrepancyProperty, LinearCountsNeverExceedCircularExtremes) {
    for (std::uint64_t n = 12; n <= 300; n += 7)
        for (std::uint64_t r = 1; r < 12; ++r) {
            const auto p = kron(n, false);
            const auto lin = local_discrepancy(p, r, false), circ = local_discrepancy(p, r, true);
            ASSERT_LE(lin.max_count, circ.max_count);
            ASSERT_GE(lin.min_count, circ.min_count);
        }
}

TEST(LocalDiscrepancy, LinearIntervalsOnSmallDyadicPrefix) {
    // points 1/8 1/4 3/8 1/2 5/8 3/4 7/8; windows [x, x + 2/7) with 0 <= x <= 5/7
    const auto d = local_discrepancy(vdc(7, false), 2, false);
    EXPECT_EQ(d.max_count, 3u);  // [1/8, 1/8 + 2/7) holds 1/8, 1/4, 3/8
    EXPECT_EQ(d.min_count, 2u);  // spacing 1/8 < 2/7 / 2 inside [1/8, 7/8], and both ends hold two
}

TEST(WindowsAndCounts, WindowSumsBracketedByDiscrepancy) {
    // a window of r gaps spans r+1 points, so it cannot be shorter than an
    // interval that holds at most r + dev points of the same prefix
    for (std::uint64_t n = 20; n <= 400; n += 19)
        for (std::uint64_t r = 2; r <= 16; ++r) {
            const auto p = kron(n, false);
            const auto w = window_extremes(gap_vector(p), r);
            const auto d = local_discrepancy(p, r);
            const Value lo = Rational(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(d.max_abs_dev) - 1,
                                      static_cast<std::int64_t>(n));
            const Value hi = Rational(static_cast<std::int64_t>(r + d.max_abs_dev + 1), static_cast<std::int64_t>(n));
            ASSERT_TRUE(compare(w.min_sum, lo) >= 0) << n << " " << r;
            ASSERT_TRUE(compare(w.max_sum, hi) <= 0) << n << " " << r;
        }
}

TEST(PairCorrelation, ListedCases) {
    const auto p2 = kron(2, false);
    const GoldenNumber dist = golden_frac(1) - golden_frac(2);  // < 1/2
    const auto f = pair_correlation(p2, GoldenNumber(Rational(2)) * dist);
    EXPECT_EQ(f.value, Rational(1));

    EXPECT_EQ(pair_correlation(kron(1, false), Rational(5)).value, Rational(0));
    EXPECT_EQ(pair_correlation(vdc(1, false), Rational(1, 3)).value, Rational(0));

    const auto v = pair_correlation(vdc(256, false), Rational(3));
    EXPECT_EQ(v.value, Rational(767, 128));  // frozen from the O(N^2) oracle
    EXPECT_THROW(pair_correlation(vdc(8, true), Rational(1)), std::invalid_argument);
    EXPECT_THROW(pair_correlation(vdc(8, false), Rational(0)), std::invalid_argument);
}

TEST(PairCorrelationProperty, MatchesQuadraticOracle) {
    for (auto kind : {SequenceKind::van_der_corput(2), SequenceKind::kronecker_golden()})
        for (std::uint64_t N : {2, 3, 17, 100, 256})
            for (std::int64_t s : {1, 2, 3, 7, 40, 200}) {
                const auto c = oracle_circle(kind, N, false);
                const oracle::Quad t{c.U * s / static_cast<oracle::i128>(N), 0};
                const auto want = oracle::close_pairs(c, t);
                std::visit(
                    [&](const auto& p) {
                        const auto f = pair_correlation(p, Rational(s));
                        ASSERT_EQ(f.value, Rational(static_cast<std::int64_t>(want), static_cast<std::int64_t>(N)))
                            << N << " " << s;
                        ASSERT_LE(f.value, Rational(static_cast<std::int64_t>(N) - 1));
                    },
                    build_prefix(kind, N, false));
            }
}

TEST(PairCorrelation, IrrationalScaleUsesExactThreshold) {
    // s = N * (distance) as a golden value, both sides exact
    const auto p = kron(50, false);
    const auto g = gap_vector(p);
    const Value gap0 = g.model.length_value(g.gaps[0]);
    const auto f = pair_correlation(p, to_golden(gap0) * GoldenNumber(Rational(50)));
    std::uint64_t at_most = 0;
    for (const auto& x : g.gaps) at_most += compare(g.model.length_value(x), gap0) <= 0;
    EXPECT_GE(f.value * Rational(50), Rational(2 * static_cast<std::int64_t>(at_most)));
}

TEST(WindowTrackerProperty, AgreesWithDirectExtremesAtEveryStep) {
    auto run = [](auto model, const SequenceKind& kind, bool origin) {
        using Model = decltype(model);
        std::vector<std::uint64_t> widths{1, 2, 3, 5, 8, 12};
        WindowTracker<Model> t(model, widths);
        if (origin) t.insert(model.origin(), 0);
        for (std::uint64_t n = 1; n <= 300; ++n) {
            t.insert(model.point(n), n);
            const auto g = gap_vector(build_prefix(kind, model, n, origin));
            for (auto m : widths) {
                if (!t.active(m)) continue;
                const auto w = window_extremes(g, m);
                ASSERT_TRUE(compare(model.length_value(t.min_sum(m)), w.min_sum) == 0) << n << " " << m;
                ASSERT_TRUE(compare(model.length_value(t.max_sum(m)), w.max_sum) == 0) << n << " " << m;
            }
        }
    };
    for (bool origin : {false, true}) {
        run(RadixModel::for_count(2, 300), SequenceKind::van_der_corput(2), origin);
        run(RadixModel::for_count(3, 300), SequenceKind::van_der_corput(3), origin);
        run(GoldenModel{}, SequenceKind::kronecker_golden(), origin);
    }
    run(LogModel{}, SequenceKind::debruijn_log(), false);  // x_1 = 0 already
}

TEST(WindowTracker, RejectsRepeatsAndUnknownWidths) {
    WindowTracker<GoldenModel> t(GoldenModel{}, {2});
    t.insert(GoldenModel{}.point(1), 1);
    EXPECT_THROW(t.insert(GoldenModel{}.point(1), 7), DuplicatePoint);
    EXPECT_THROW(t.min_sum(2), InvalidWindow);  // not active with one point
    EXPECT_THROW(t.min_sum(3), InvalidWindow);
    EXPECT_THROW(WindowTracker<GoldenModel>(GoldenModel{}, {0}), InvalidWindow);
}

TEST(ReportsRoundTrip, WindowsCsvAndJson) {
    std::vector<WindowReport> rows;
    for (std::uint64_t r : {1, 5, 53}) rows.push_back(window_extremes(gap_vector(vdc(660, true)), r));
    for (std::uint64_t r : {1, 4}) rows.push_back(window_extremes(gap_vector(kron(100, false)), r));
    rows.push_back(window_extremes(gap_vector(build_prefix(SequenceKind::debruijn_log(), LogModel{}, 50, false)), 3));
    std::stringstream csv;
    write_windows_csv_header(csv);
    for (const auto& w : rows) write_windows_csv_row(csv, w);
    const auto back = read_windows_csv(csv);
    ASSERT_EQ(back.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto expect = rows[i];
        expect.min_pos.reset();
        expect.max_pos.reset();
        EXPECT_EQ(back[i], expect) << i;
        EXPECT_EQ(window_report_from_json(nlohmann::json::parse(to_json(rows[i]).dump())), rows[i]);
    }
}

TEST(ReportsRoundTrip, DiscrepancyAndPairCorrelation) {
    std::vector<DiscrepancyReport> d;
    for (std::uint64_t r : {1, 2, 8}) d.push_back(local_discrepancy(kron(300, false), r));
    std::stringstream csv;
    write_discrepancy_csv_header(csv);
    for (const auto& x : d) write_discrepancy_csv_row(csv, x);
    EXPECT_EQ(read_discrepancy_csv(csv), d);
    for (const auto& x : d) EXPECT_EQ(discrepancy_report_from_json(to_json(x)), x);

    std::vector<PairCorrelationReport> pc{pair_correlation(vdc(256, false), Rational(3)),
                                          pair_correlation(kron(64, false), Rational(5, 2))};
    std::stringstream pcsv;
    write_paircorr_csv_header(pcsv);
    for (const auto& x : pc) write_paircorr_csv_row(pcsv, x);
    EXPECT_EQ(read_paircorr_csv(pcsv), pc);
    for (const auto& x : pc) EXPECT_EQ(paircorr_report_from_json(to_json(x)), x);
}

TEST(ReportsRoundTrip, MalformedInputIsRejected) {
    std::stringstream wrong_header("kind,n\nvdc2,1\n");
    EXPECT_THROW(read_discrepancy_csv(wrong_header), std::invalid_argument);
    std::stringstream short_row(std::string(kDiscrepancyHeader) + "\nvdc2,5,1,2\n");
    EXPECT_THROW(read_discrepancy_csv(short_row), std::invalid_argument);
    std::stringstream bad_number(std::string(kDiscrepancyHeader) + "\nvdc2,5,x,2,1,1\n");
    EXPECT_THROW(read_discrepancy_csv(bad_number), std::invalid_argument);
}
