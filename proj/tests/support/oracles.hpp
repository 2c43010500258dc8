#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// code paths it is used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "fairqa/edc.hpp"
#include "fairqa/image.hpp"
#include "fairqa/regions.hpp"

namespace fairqa::oracle {

/// Luminance by enumerating every candidate level and taking the one nearest
/// 0.299 R + 0.587 G + 0.114 B (ties to the larger level), in exact
/// thousandths.
int luminance(Rgb p);

/// Entropy from a map of value counts: log2 N - (1/N) sum c log2 c.
double entropy(std::span<const int> luminances);

/// round(100 / (1 + e^(5 - H))) by direct evaluation.
int dynamic_range(std::span<const int> luminances);

/// round(100 * (1 - k / N)) for k values in [lo, hi], found by scanning all
/// 101 candidates with exact integer comparisons (ties upward).
int band_score(std::span<const int> luminances, int lo, int hi);

/// Per-pixel even-odd crossing test and disc test.
regions::RegionMask sclera_mask(std::span<const regions::EyeAnnotation> eyes, int width, int height);

/// Threshold: smallest similarity t with #{s <= t} > floor(e N).
double threshold(std::span<const double> similarities, double starting_error);

struct EdcPoint {
    double discard;
    double error;
    std::size_t retained;
};

/// EDC by explicitly building the retained pair list at every fraction.
std::vector<EdcPoint> edc(std::span<const edc::MatedPair> pairs, double starting_error,
                          std::span<const double> grid, std::size_t min_retained);

/// Integrates the piecewise-linear curve on [0, limit] segment by segment with
/// Simpson's rule (exact on linear pieces), holding the last value flat past
/// the final point, and divides by limit.
double pauc(std::span<const double> xs, std::span<const double> ys, double limit);

/// sqrt(1 - sum sqrt(p_i q_i)).
double hellinger_bc(std::span<const double> p, std::span<const double> q);

}  // namespace fairqa::oracle
