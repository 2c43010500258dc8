#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fairqa/exec.hpp"

namespace fairqa::edc {

inline constexpr std::size_t kDefaultMinRetained = 10;
inline constexpr double kDefaultGridStep = 0.05;
inline constexpr double kDefaultPaucLimit = 0.20;

/// A comparison between two samples of the same subject.
struct MatedPair {
    std::string sample_a;
    std::string sample_b;
    double similarity = 0.0;
    /// min(quality(a), quality(b))
    double pair_quality = 0.0;
};

/// Error-vs-discard curve. error_rates[k] is the FNMR over pairs retained at
/// discard_fractions[k], using the threshold calibrated at zero discard.
struct EdcCurve {
    std::vector<double> discard_fractions;
    std::vector<double> error_rates;
    std::vector<std::size_t> retained_pairs;
    double threshold = 0.0;
    double starting_error = 0.0;
    std::size_t pair_count = 0;
};

/// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Throws LengthMismatch or ZeroVector.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Input to pairing. An empty embedding means the embedding is missing.
struct PairingSample {
    std::string sample_id;
    std::string subject_id;
    std::span<const double> embedding;
};

/// All unordered same-subject pairs. Subjects appear in order of first
/// occurrence; within a subject pairs follow sample order. Throws
/// MissingEmbedding or MissingQuality.
std::vector<MatedPair> build_mated_pairs(std::span<const PairingSample> samples,
                                         const std::map<std::string, double>& qualities);

/// Lower empirical quantile of the similarities at rank floor(e N): the FNMR
/// at the returned threshold (strictly-below rule) is at most e.
double calibrate_threshold(std::span<const double> similarities, double starting_error);

/// Fraction of pairs whose similarity is strictly below the threshold.
double fnmr_at(std::span<const MatedPair> pairs, double threshold);

/// {0, step, 2 step, ...} below 1. Throws InvalidParameter unless 0 < step < 1.
std::vector<double> discard_grid(double step = kDefaultGridStep);

/// Sweeps the discard grid. At fraction d the pairs with quality strictly below
/// the lower d-quantile of pair qualities are dropped, so tied qualities are
/// retained together. The curve stops at the first fraction retaining fewer
/// than `min_retained` pairs. Throws EmptyInput (< 2 pairs), InvalidParameter
/// (bad grid or starting error) or AllDiscarded (no point survives).
EdcCurve edc_curve(std::span<const MatedPair> pairs, double starting_error,
                   std::span<const double> grid, std::size_t min_retained = kDefaultMinRetained,
                   Exec exec = Exec::parallel);

/// Trapezoidal area under the curve over [0, limit], divided by limit. A curve
/// that overshoots the limit is linearly interpolated at it; one that stops
/// short of it is extended with its last error rate. Throws InsufficientPoints
/// when fewer than two points lie within the limit.
double pauc(const EdcCurve& curve, double limit = kDefaultPaucLimit);

}  // namespace fairqa::edc
