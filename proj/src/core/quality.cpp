#include "fairqa/quality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fairqa::quality {

namespace {

bool run_parallel(Exec exec, std::size_t n) {
    return exec == Exec::parallel && n >= kParallelGrain;
}

// round(100 * (total - hits) / total) evaluated in integers, half rounding up.
QualityScore band_score(std::uint64_t hits, std::uint64_t total) {
    const std::uint64_t kept = total - hits;
    return QualityScore(static_cast<int>((200 * kept + total) / (2 * total)));
}

}  // namespace

PixelRegion::PixelRegion(std::vector<Rgb> pixels) : pixels_(std::move(pixels)) {
    if (pixels_.empty()) {
        throw Error(ErrorCode::EmptyRegion, "pixel region has no pixels");
    }
}

LuminanceHistogram::LuminanceHistogram(const Counts& counts) : counts_(counts) {
    for (auto c : counts_) total_ += c;
    if (total_ == 0) {
        throw Error(ErrorCode::EmptyRegion, "histogram of an empty sequence");
    }
    const double inv = 1.0 / static_cast<double>(total_);
    for (int i = 0; i < kLevels; ++i) {
        bins_[i] = static_cast<double>(counts_[i]) * inv;
    }
}

std::uint64_t LuminanceHistogram::count_in(int lo, int hi) const {
    lo = std::max(lo, 0);
    hi = std::min(hi, kLevels - 1);
    std::uint64_t n = 0;
    for (int i = lo; i <= hi; ++i) n += counts_[i];
    return n;
}

QualityScore::QualityScore(int value) : value_(value) {
    if (value < 0 || value > 100) {
        throw Error(ErrorCode::InvalidParameter,
                    "quality score out of [0,100]: " + std::to_string(value));
    }
}

std::vector<std::uint8_t> luminance(const PixelRegion& region, Exec exec) {
    const auto px = region.pixels();
    const auto n = static_cast<std::ptrdiff_t>(px.size());
    std::vector<std::uint8_t> out(px.size());
    if (run_parallel(exec, px.size())) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = luminance(px[i]);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = luminance(px[i]);
    }
    return out;
}

LuminanceHistogram::Counts luminance_counts(std::span<const Rgb> pixels, Exec exec) {
    LuminanceHistogram::Counts counts{};
    const auto n = static_cast<std::ptrdiff_t>(pixels.size());
    if (!run_parallel(exec, pixels.size())) {
        for (const auto& p : pixels) ++counts[luminance(p)];
        return counts;
    }
#pragma omp parallel
    {
        LuminanceHistogram::Counts local{};
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) ++local[luminance(pixels[i])];
#pragma omp critical(fairqa_luma_counts)
        for (int b = 0; b < kLevels; ++b) counts[b] += local[b];
    }
    return counts;
}

LuminanceHistogram histogram(std::span<const std::uint8_t> luminances) {
    if (luminances.empty()) {
        throw Error(ErrorCode::EmptyRegion, "histogram of an empty sequence");
    }
    LuminanceHistogram::Counts counts{};
    for (auto l : luminances) ++counts[l];
    return LuminanceHistogram(counts);
}

LuminanceHistogram histogram(const PixelRegion& region, Exec exec) {
    return LuminanceHistogram(luminance_counts(region.pixels(), exec));
}

double entropy(const LuminanceHistogram& hist) {
    double h = 0.0;
    for (double p : hist.bins()) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return std::clamp(h, 0.0, 8.0);
}

double sigmoid(double x, const SigmoidParams& params) {
    if (!(params.width > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "sigmoid width must be positive");
    }
    return 1.0 / (1.0 + std::exp((params.center - x) / params.width));
}

QualityScore score_from_fraction(double fraction) {
    const double scaled = std::round(100.0 * fraction);
    return QualityScore(static_cast<int>(std::clamp(scaled, 0.0, 100.0)));
}

QualityScore dynamic_range_score(const LuminanceHistogram& hist) {
    return score_from_fraction(sigmoid(entropy(hist)));
}

QualityScore under_exposure_score(const LuminanceHistogram& hist) {
    return band_score(hist.count_in(0, kUnderExposureMax), hist.pixel_count());
}

QualityScore over_exposure_score(const LuminanceHistogram& hist) {
    return band_score(hist.count_in(kOverExposureMin, kLevels - 1), hist.pixel_count());
}

QualityScore dynamic_range_score(const PixelRegion& region) {
    return dynamic_range_score(histogram(region));
}

QualityScore under_exposure_score(const PixelRegion& region) {
    return under_exposure_score(histogram(region));
}

QualityScore over_exposure_score(const PixelRegion& region) {
    return over_exposure_score(histogram(region));
}

QualityComponents assess(const LuminanceHistogram& hist) {
    return {dynamic_range_score(hist), under_exposure_score(hist), over_exposure_score(hist)};
}

QualityComponents assess(const PixelRegion& region, Exec exec) {
    return assess(histogram(region, exec));
}

}  // namespace fairqa::quality
