#include <gtest/gtest.h>

#include <random>

#include "fairqa/histmetrics.hpp"
#include "oracles.hpp"

using namespace fairqa;
using namespace fairqa::histmetrics;
using quality::LuminanceHistogram;

namespace {

LuminanceHistogram from_counts(std::initializer_list<std::pair<int, std::uint64_t>> entries) {
    LuminanceHistogram::Counts c{};
    for (auto [bin, n] : entries) c[bin] = n;
    return LuminanceHistogram(c);
}

LuminanceHistogram random_histogram(std::mt19937& rng) {
    LuminanceHistogram::Counts c{};
    const int support = 1 + static_cast<int>(rng() % 256);
    const int start = static_cast<int>(rng() % 256);
    for (int i = 0; i < support; ++i) c[(start + i) % 256] = rng() % 50;
    c[start] += 1;
    return LuminanceHistogram(c);
}

}  // namespace

TEST(ChiSquared, Examples) {
    const auto p = from_counts({{0, 1}, {1, 1}});
    EXPECT_EQ(chi_squared(p, p), 0.0);
    EXPECT_DOUBLE_EQ(chi_squared(from_counts({{0, 5}}), from_counts({{1, 3}})), 1.0);
    // 0.5 * (0.25 / 1.5 + 0.25 / 0.5)
    EXPECT_NEAR(chi_squared(p, from_counts({{0, 1}})), 1.0 / 3.0, 1e-15);
}

TEST(ChiSquared, PearsonVariant) {
    const auto p = from_counts({{0, 1}, {1, 1}});
    const auto q = from_counts({{0, 1}});
    // (0.5 - 1)^2 / 1; the bin with q = 0 is skipped.
    EXPECT_DOUBLE_EQ(chi_squared(p, q, ChiSquaredVariant::pearson), 0.25);
    // (1 - 0.5)^2/0.5 + (0 - 0.5)^2/0.5
    EXPECT_DOUBLE_EQ(chi_squared(q, p, ChiSquaredVariant::pearson), 1.0);
    EXPECT_EQ(chi_squared_variant_from_string("pearson"), ChiSquaredVariant::pearson);
    EXPECT_THROW(chi_squared_variant_from_string("kl"), Error);
}

TEST(Hellinger, Examples) {
    const auto p = from_counts({{3, 2}, {9, 7}});
    EXPECT_EQ(hellinger(p, p), 0.0);
    EXPECT_EQ(hellinger(from_counts({{0, 4}}), from_counts({{255, 9}})), 1.0);
    EXPECT_NEAR(hellinger(from_counts({{0, 1}, {1, 1}}), from_counts({{0, 1}})),
                std::sqrt(1.0 - std::sqrt(0.5)), 1e-12);
    EXPECT_NEAR(hellinger(from_counts({{0, 1}, {1, 1}}), from_counts({{0, 1}})), 0.5412, 5e-5);
}

TEST(Distances, AxiomsOnRandomPairs) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = random_histogram(rng);
        const auto q = random_histogram(rng);
        EXPECT_EQ(chi_squared(p, q), chi_squared(q, p));
        EXPECT_EQ(hellinger(p, q), hellinger(q, p));
        EXPECT_EQ(chi_squared(p, p), 0.0);
        EXPECT_EQ(hellinger(p, p), 0.0);
        const double c = chi_squared(p, q);
        const double h = hellinger(p, q);
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0);
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, 1.0);
        EXPECT_NEAR(h, oracle::hellinger_bc(p.bins(), q.bins()), 1e-12);
    }
}
