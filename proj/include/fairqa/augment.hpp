#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairqa/exec.hpp"
#include "fairqa/image.hpp"

namespace fairqa::augment {

enum class Kind { dynamic_range_compression, exposure_scale };

std::string_view to_string(Kind kind) noexcept;
/// Accepts "dynamic_range_compression" and "exposure_scale".
Kind kind_from_string(std::string_view name);

struct AugmentationSpec {
    Kind kind = Kind::exposure_scale;
    double parameter = 1.0;
    std::string tag;

    friend bool operator==(const AugmentationSpec&, const AugmentationSpec&) = default;
};

/// Throws InvalidParameter: compression needs 0 < c <= 1, exposure needs f > 0,
/// tags must be non-empty and must not be "orig".
void validate(const AugmentationSpec& spec);

/// v' = round(128 + c (v - 128)) per channel. 128 is a fixed point for every c.
RgbImage compress_dynamic_range(const RgbImage& image, double c, Exec exec = Exec::parallel);

/// v' = clamp(round(f v), 0, 255) per channel.
RgbImage scale_exposure(const RgbImage& image, double f, Exec exec = Exec::parallel);

RgbImage apply(const RgbImage& image, const AugmentationSpec& spec, Exec exec = Exec::parallel);

struct Variant {
    std::string tag;
    RgbImage image;
};

/// The untouched image under tag "orig" followed by one variant per spec, in
/// spec order. Throws DuplicateTag.
std::vector<Variant> generate_variants(const RgbImage& image,
                                       const std::vector<AugmentationSpec>& specs,
                                       Exec exec = Exec::parallel);

/// Dynamic range c in {0.6, 0.4, 0.2}.
std::vector<AugmentationSpec> dynamic_range_ladder();
/// Exposure f in {0.5, 0.3, 0.15}.
std::vector<AugmentationSpec> under_exposure_ladder();
/// Exposure f in {1.5, 2.0, 3.0}.
std::vector<AugmentationSpec> over_exposure_ladder();
/// Dynamic range plus under-exposure ladders (six specs).
std::vector<AugmentationSpec> default_ladder();
/// All three ladders (nine specs).
std::vector<AugmentationSpec> full_ladder();

/// Looks up "default", "full", "dynamic-range", "under-exposure",
/// "over-exposure" or "exposure" (under + over). Throws InvalidParameter.
std::vector<AugmentationSpec> named_ladder(std::string_view name);

}  // namespace fairqa::augment
