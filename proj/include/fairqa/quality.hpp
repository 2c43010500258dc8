#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fairqa/error.hpp"
#include "fairqa/exec.hpp"
#include "fairqa/image.hpp"

namespace fairqa::quality {

inline constexpr int kLevels = 256;
/// Luminance values at or below this count as under-exposed.
inline constexpr int kUnderExposureMax = 25;
/// Luminance values at or above this count as over-exposed.
inline constexpr int kOverExposureMin = 247;

/// The masked pixels of one region (face skin or sclera) of one image.
/// Never empty.
class PixelRegion {
public:
    explicit PixelRegion(std::vector<Rgb> pixels);

    std::span<const Rgb> pixels() const noexcept { return pixels_; }
    std::size_t count() const noexcept { return pixels_.size(); }

private:
    std::vector<Rgb> pixels_;
};

/// Normalized 256-bin luminance histogram. Keeps the integer counts so that
/// band proportions can be evaluated exactly.
class LuminanceHistogram {
public:
    using Counts = std::array<std::uint64_t, kLevels>;

    explicit LuminanceHistogram(const Counts& counts);

    const Counts& counts() const noexcept { return counts_; }
    const std::array<double, kLevels>& bins() const noexcept { return bins_; }
    double operator[](int level) const { return bins_[static_cast<std::size_t>(level)]; }
    std::uint64_t pixel_count() const noexcept { return total_; }

    /// Number of pixels whose luminance lies in [lo, hi].
    std::uint64_t count_in(int lo, int hi) const;

private:
    Counts counts_{};
    std::array<double, kLevels> bins_{};
    std::uint64_t total_ = 0;
};

/// Integer quality component value in [0, 100].
class QualityScore {
public:
    constexpr QualityScore() = default;
    explicit QualityScore(int value);

    constexpr int value() const noexcept { return value_; }

    friend constexpr bool operator==(QualityScore, QualityScore) = default;
    friend constexpr auto operator<=>(QualityScore, QualityScore) = default;

private:
    int value_ = 0;
};

struct QualityComponents {
    QualityScore dynamic_range;
    QualityScore under_exposure;
    QualityScore over_exposure;

    friend bool operator==(const QualityComponents&, const QualityComponents&) = default;
};

struct SigmoidParams {
    double center = 5.0;
    double width = 1.0;
};

/// BT.601 luma with round-half-up on the exact integer sum,
/// i.e. round(0.299 R + 0.587 G + 0.114 B).
constexpr std::uint8_t luminance(Rgb p) noexcept {
    const std::uint32_t weighted = 299u * p.r + 587u * p.g + 114u * p.b;
    return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

std::vector<std::uint8_t> luminance(const PixelRegion& region, Exec exec = Exec::parallel);

/// Luminance counts of a pixel span. The parallel variant reduces per-thread
/// count arrays.
LuminanceHistogram::Counts luminance_counts(std::span<const Rgb> pixels,
                                            Exec exec = Exec::parallel);

/// Throws EmptyRegion for an empty sequence.
LuminanceHistogram histogram(std::span<const std::uint8_t> luminances);
LuminanceHistogram histogram(const PixelRegion& region, Exec exec = Exec::parallel);

/// Shannon entropy in bits, -sum h_i log2 h_i, with 0 log 0 = 0. In [0, 8].
double entropy(const LuminanceHistogram& hist);

/// 1 / (1 + exp((center - x) / width)). Throws InvalidParameter for width <= 0.
double sigmoid(double x, const SigmoidParams& params = {});

/// round(100 * fraction), half away from zero, clamped to [0, 100].
QualityScore score_from_fraction(double fraction);

QualityScore dynamic_range_score(const LuminanceHistogram& hist);
QualityScore under_exposure_score(const LuminanceHistogram& hist);
QualityScore over_exposure_score(const LuminanceHistogram& hist);

QualityScore dynamic_range_score(const PixelRegion& region);
QualityScore under_exposure_score(const PixelRegion& region);
QualityScore over_exposure_score(const PixelRegion& region);

/// All three components from a single histogram pass.
QualityComponents assess(const PixelRegion& region, Exec exec = Exec::parallel);
QualityComponents assess(const LuminanceHistogram& hist);

}  // namespace fairqa::quality
