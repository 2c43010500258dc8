#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "fairqa/edc.hpp"
#include "fairqa/error.hpp"
#include "oracles.hpp"

using namespace fairqa;
using namespace fairqa::edc;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

std::vector<MatedPair> make_pairs(std::span<const double> sims, std::span<const double> quals) {
    std::vector<MatedPair> pairs;
    for (std::size_t i = 0; i < sims.size(); ++i) {
        pairs.push_back({"a" + std::to_string(i), "b" + std::to_string(i), sims[i], quals[i]});
    }
    return pairs;
}

std::vector<double> similarities(std::span<const MatedPair> pairs) {
    std::vector<double> s;
    for (const auto& p : pairs) s.push_back(p.similarity);
    return s;
}

// Quality is a noisy function of similarity, with coarse levels so ties occur.
std::vector<MatedPair> random_pairs(std::mt19937& rng, std::size_t n, int quality_levels) {
    std::uniform_real_distribution<double> u(-0.2, 1.0);
    std::normal_distribution<double> noise(0.0, 0.3);
    std::vector<MatedPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::round(u(rng) * 50.0) / 50.0;
        const double q = std::clamp(std::round((s + noise(rng)) * quality_levels), 0.0, 100.0);
        pairs.push_back({"a" + std::to_string(i), "b" + std::to_string(i), s, q});
    }
    return pairs;
}

void expect_matches_oracle(std::span<const MatedPair> pairs, double e, std::span<const double> grid,
                           std::size_t min_retained) {
    const auto expected = oracle::edc(pairs, e, grid, min_retained);
    if (expected.empty()) {
        EXPECT_EQ(code_of([&] { edc_curve(pairs, e, grid, min_retained); }), ErrorCode::AllDiscarded);
        return;
    }
    const auto curve = edc_curve(pairs, e, grid, min_retained);
    ASSERT_EQ(curve.discard_fractions.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(curve.discard_fractions[k], expected[k].discard);
        EXPECT_NEAR(curve.error_rates[k], expected[k].error, 1e-12);
        EXPECT_EQ(curve.retained_pairs[k], expected[k].retained);
    }
}

}  // namespace

TEST(Cosine, Examples) {
    const std::vector<double> e{0.6, 0.8};
    EXPECT_NEAR(cosine_similarity(e, e), 1.0, 1e-15);
    EXPECT_EQ(cosine_similarity(std::vector<double>{1, 0}, std::vector<double>{0, 1}), 0.0);
    EXPECT_NEAR(cosine_similarity(std::vector<double>{1, 1}, std::vector<double>{1, 0}), 0.7071, 5e-5);
    EXPECT_EQ(code_of([] { cosine_similarity(std::vector<double>{0, 0}, std::vector<double>{1, 0}); }),
              ErrorCode::ZeroVector);
    EXPECT_EQ(code_of([] { cosine_similarity(std::vector<double>{1}, std::vector<double>{1, 0}); }),
              ErrorCode::LengthMismatch);
}

TEST(Pairing, Counts) {
    const std::vector<double> v{1.0, 0.0};
    const std::vector<double> w{0.0, 1.0};
    std::map<std::string, double> q{{"s1", 10}, {"s2", 20}, {"s3", 30}, {"t1", 40}};

    std::vector<PairingSample> three{{"s1", "A", v}, {"s2", "A", w}, {"s3", "A", v}};
    const auto pairs = build_mated_pairs(three, q);
    ASSERT_EQ(pairs.size(), 3u);
    EXPECT_EQ(pairs[0].sample_a, "s1");
    EXPECT_EQ(pairs[0].sample_b, "s2");
    EXPECT_EQ(pairs[0].pair_quality, 10);
    EXPECT_EQ(pairs[0].similarity, 0.0);
    EXPECT_EQ(pairs[1].similarity, 1.0);
    EXPECT_EQ(pairs[2].pair_quality, 20);

    std::vector<PairingSample> singles{{"s1", "A", v}, {"t1", "B", w}};
    EXPECT_TRUE(build_mated_pairs(singles, q).empty());

    std::vector<PairingSample> two_subjects{{"s1", "A", v}, {"t1", "B", w}, {"s2", "A", w}, {"s3", "B", v}};
    EXPECT_EQ(build_mated_pairs(two_subjects, q).size(), 2u);

    std::vector<PairingSample> missing{{"s1", "A", v}, {"s2", "A", {}}};
    EXPECT_EQ(code_of([&] { build_mated_pairs(missing, q); }), ErrorCode::MissingEmbedding);
    std::vector<PairingSample> unscored{{"s1", "A", v}, {"zz", "A", w}};
    EXPECT_EQ(code_of([&] { build_mated_pairs(unscored, q); }), ErrorCode::MissingQuality);
}

TEST(Threshold, Examples) {
    std::vector<double> s;
    for (int i = 1; i <= 10; ++i) s.push_back(i / 10.0);
    const auto pairs = make_pairs(s, s);
    const double t = calibrate_threshold(s, 0.1);
    EXPECT_DOUBLE_EQ(t, 0.2);
    EXPECT_DOUBLE_EQ(fnmr_at(pairs, t), 0.1);
    EXPECT_DOUBLE_EQ(calibrate_threshold(s, 1e-6), 0.1);
    EXPECT_EQ(fnmr_at(pairs, 0.1), 0.0);

    const std::vector<double> equal(7, 0.42);
    const double te = calibrate_threshold(equal, 0.3);
    EXPECT_EQ(fnmr_at(make_pairs(equal, equal), te), 0.0);
}

TEST(Threshold, FnmrExamples) {
    const std::vector<double> s{0.2, 0.4, 0.6, 0.8};
    const auto pairs = make_pairs(s, s);
    EXPECT_EQ(fnmr_at(pairs, 0.0), 0.0);
    EXPECT_EQ(fnmr_at(pairs, 1.0), 1.0);
    EXPECT_EQ(fnmr_at(pairs, 0.4), 0.25);
}

TEST(Threshold, MatchesOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pairs = random_pairs(rng, 2 + rng() % 60, 10);
        const auto s = similarities(pairs);
        for (double e : {0.01, 0.05, 0.1, 0.25, 0.5}) {
            const double t = calibrate_threshold(s, e);
            EXPECT_EQ(t, oracle::threshold(s, e));
            EXPECT_LE(fnmr_at(pairs, t), e + 1e-12);
        }
    }
}

TEST(Curve, PerfectOracle) {
    const std::vector<double> s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    const auto pairs = make_pairs(s, s);
    const std::vector<double> grid{0.0, 0.25, 0.5};
    const auto curve = edc_curve(pairs, 0.25, grid, 2);
    ASSERT_EQ(curve.error_rates.size(), 3u);
    EXPECT_DOUBLE_EQ(curve.threshold, 0.3);
    EXPECT_DOUBLE_EQ(curve.error_rates[0], 0.25);
    EXPECT_EQ(curve.error_rates[1], 0.0);
    EXPECT_EQ(curve.error_rates[2], 0.0);
    EXPECT_EQ(curve.retained_pairs, (std::vector<std::size_t>{8, 6, 4}));
    EXPECT_EQ(curve.pair_count, 8u);
}

TEST(Curve, ConstantQualityIsFlat) {
    std::mt19937 rng(12);
    auto pairs = random_pairs(rng, 40, 10);
    for (auto& p : pairs) p.pair_quality = 50;
    const auto curve = edc_curve(pairs, 0.1, discard_grid(0.05));
    ASSERT_EQ(curve.error_rates.size(), 20u);
    for (double err : curve.error_rates) EXPECT_EQ(err, curve.error_rates[0]);
    for (auto r : curve.retained_pairs) EXPECT_EQ(r, 40u);
}

TEST(Curve, SingletonGrid) {
    const std::vector<double> s{0.3, 0.9, 0.5};
    const std::vector<double> grid{0.0};
    const auto curve = edc_curve(make_pairs(s, s), 0.4, grid, 1);
    ASSERT_EQ(curve.error_rates.size(), 1u);
    EXPECT_DOUBLE_EQ(curve.error_rates[0], 1.0 / 3.0);
}

TEST(Curve, InputValidation) {
    const std::vector<double> one{0.5};
    const std::vector<double> grid{0.0, 0.5};
    EXPECT_EQ(code_of([&] { edc_curve(make_pairs(one, one), 0.1, grid); }), ErrorCode::EmptyInput);

    const std::vector<double> s{0.1, 0.2, 0.3, 0.4};
    const auto pairs = make_pairs(s, s);
    for (const std::vector<double>& bad : {std::vector<double>{0.1, 0.2}, std::vector<double>{0.0, 0.5, 0.5},
                                           std::vector<double>{0.0, 1.0}, std::vector<double>{}}) {
        EXPECT_EQ(code_of([&] { edc_curve(pairs, 0.1, bad, 1); }), ErrorCode::InvalidParameter);
    }
    EXPECT_EQ(code_of([&] { edc_curve(pairs, 0.0, grid, 1); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([&] { edc_curve(pairs, 0.1, grid, 5); }), ErrorCode::AllDiscarded);
    EXPECT_EQ(code_of([] { discard_grid(1.0); }), ErrorCode::InvalidParameter);
    EXPECT_EQ(code_of([] { discard_grid(0.0); }), ErrorCode::InvalidParameter);
}

TEST(Curve, StopsBelowMinimumRetained) {
    const std::vector<double> s{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    const auto curve = edc_curve(make_pairs(s, s), 0.25, discard_grid(0.125), 5);
    // 8, 7, 6, 5 retained; 4 falls below the minimum.
    EXPECT_EQ(curve.retained_pairs, (std::vector<std::size_t>{8, 7, 6, 5}));
}

TEST(Grid, Values) {
    const auto g = discard_grid(0.05);
    ASSERT_EQ(g.size(), 20u);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[3], 0.15);
    EXPECT_EQ(g[19], 0.95);
    EXPECT_EQ(discard_grid(0.3).size(), 4u);
}

TEST(Curve, MatchesBruteForceOracle) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const auto pairs = random_pairs(rng, 2 + rng() % 11, 1 + static_cast<int>(rng() % 8));
        const double step = std::vector<double>{0.05, 0.1, 0.125, 0.2, 0.25}[rng() % 5];
        const auto grid = discard_grid(step);
        for (double e : {0.05, 0.1, 0.3}) {
            expect_matches_oracle(pairs, e, grid, 1 + rng() % 3);
        }
    }
}

TEST(Curve, InvariantUnderMonotoneQualityTransform) {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        auto pairs = random_pairs(rng, 100, 20);
        const auto grid = discard_grid(0.05);
        const auto before = edc_curve(pairs, 0.1, grid);
        for (auto& p : pairs) p.pair_quality = std::exp(p.pair_quality / 7.0) - 3.0;
        const auto after = edc_curve(pairs, 0.1, grid);
        EXPECT_EQ(before.error_rates, after.error_rates);
        EXPECT_EQ(before.retained_pairs, after.retained_pairs);
    }
}

TEST(Curve, InformativeQualityBeatsShuffledQuality) {
    std::mt19937 rng(15);
    auto pairs = random_pairs(rng, 400, 20);
    std::normal_distribution<double> noise(0.0, 0.3);
    for (auto& p : pairs) p.pair_quality = p.similarity + noise(rng);
    const auto grid = discard_grid(0.05);
    const double informative = pauc(edc_curve(pairs, 0.1, grid));

    std::vector<double> qualities;
    for (const auto& p : pairs) qualities.push_back(p.pair_quality);
    int beaten = 0;
    for (int shuffle = 0; shuffle < 20; ++shuffle) {
        std::shuffle(qualities.begin(), qualities.end(), rng);
        for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].pair_quality = qualities[i];
        if (informative < pauc(edc_curve(pairs, 0.1, grid))) ++beaten;
    }
    EXPECT_EQ(beaten, 20);
}

TEST(Curve, ExecutionModesAgree) {
    std::mt19937 rng(16);
    const auto pairs = random_pairs(rng, 50000, 40);
    const auto grid = discard_grid(0.02);
    const auto serial = edc_curve(pairs, 0.05, grid, 10, Exec::serial);
    const auto parallel = edc_curve(pairs, 0.05, grid, 10, Exec::parallel);
    EXPECT_EQ(serial.error_rates, parallel.error_rates);
    EXPECT_EQ(serial.retained_pairs, parallel.retained_pairs);
    EXPECT_EQ(serial.threshold, parallel.threshold);
}

TEST(Pauc, Examples) {
    EdcCurve flat;
    flat.discard_fractions = {0.0, 0.05, 0.1, 0.15, 0.2};
    flat.error_rates.assign(5, 0.05);
    EXPECT_NEAR(pauc(flat), 0.05, 1e-15);

    EdcCurve linear;
    linear.discard_fractions = {0.0, 0.2};
    linear.error_rates = {0.1, 0.0};
    EXPECT_NEAR(pauc(linear), 0.05, 1e-15);

    EdcCurve five;
    five.discard_fractions = {0.0, 0.05, 0.1, 0.15, 0.2};
    five.error_rates = {0.1, 0.08, 0.05, 0.05, 0.02};
    EXPECT_NEAR(pauc(five), oracle::pauc(five.discard_fractions, five.error_rates, 0.2), 1e-12);
    // (0.09 + 0.065 + 0.05 + 0.035) * 0.05 / 0.2
    EXPECT_NEAR(pauc(five), 0.06, 1e-12);

    EdcCurve single;
    single.discard_fractions = {0.0, 0.3};
    single.error_rates = {0.1, 0.0};
    EXPECT_EQ(code_of([&] { pauc(single); }), ErrorCode::InsufficientPoints);
}

TEST(Pauc, BoundaryHandling) {
    EdcCurve over;
    over.discard_fractions = {0.0, 0.15, 0.3};
    over.error_rates = {0.1, 0.1, 0.0};
    // Interpolated value at 0.2 is 0.1 - 0.1/3.
    const double at_limit = 0.1 - 0.1 / 3.0;
    EXPECT_NEAR(pauc(over), (0.1 * 0.15 + 0.5 * (0.1 + at_limit) * 0.05) / 0.2, 1e-12);
    EXPECT_NEAR(pauc(over), oracle::pauc(over.discard_fractions, over.error_rates, 0.2), 1e-12);

    EdcCurve short_curve;
    short_curve.discard_fractions = {0.0, 0.1};
    short_curve.error_rates = {0.2, 0.0};
    EXPECT_NEAR(pauc(short_curve), (0.01 + 0.0) / 0.2, 1e-12);
    EXPECT_NEAR(pauc(short_curve), oracle::pauc(short_curve.discard_fractions, short_curve.error_rates, 0.2),
                1e-12);
}

TEST(Pauc, MatchesOracleOnRandomCurves) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pairs = random_pairs(rng, 20 + rng() % 200, 10);
        const auto curve = edc_curve(pairs, 0.1, discard_grid(0.05), 5);
        for (double limit : {0.1, 0.2, 0.33, 0.5}) {
            double got = 0;
            try {
                got = pauc(curve, limit);
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::InsufficientPoints);
                continue;
            }
            EXPECT_NEAR(got, oracle::pauc(curve.discard_fractions, curve.error_rates, limit), 1e-12);
        }
    }
}
