#include "fairqa/augment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>

namespace fairqa::augment {

namespace {

using Lut = std::array<std::uint8_t, 256>;

std::uint8_t clamp_round(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

std::uint8_t compress_value(std::uint8_t v, double c) {
    return clamp_round(128.0 + c * (static_cast<double>(v) - 128.0));
}

std::uint8_t exposure_value(std::uint8_t v, double f) {
    return clamp_round(f * static_cast<double>(v));
}

template <typename Fn>
Lut make_lut(Fn fn) {
    Lut lut{};
    for (int v = 0; v < 256; ++v) lut[v] = fn(static_cast<std::uint8_t>(v));
    return lut;
}

// Serial path evaluates the transform per channel; the parallel path goes
// through a 256-entry table.
template <typename Fn>
RgbImage map_channels(const RgbImage& image, Fn fn, Exec exec) {
    RgbImage out = image;
    auto px = out.pixels();
    const auto n = static_cast<std::ptrdiff_t>(px.size());
    if (exec == Exec::serial) {
        for (auto& p : px) p = {fn(p.r), fn(p.g), fn(p.b)};
        return out;
    }
    const Lut lut = make_lut(fn);
    if (px.size() >= kParallelGrain) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            px[i] = {lut[px[i].r], lut[px[i].g], lut[px[i].b]};
        }
    } else {
        for (auto& p : px) p = {lut[p.r], lut[p.g], lut[p.b]};
    }
    return out;
}

std::string tag_for(const char* prefix, double parameter) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%g", prefix, parameter);
    return buf;
}

AugmentationSpec compression(double c) {
    return {Kind::dynamic_range_compression, c, tag_for("dr", c)};
}

AugmentationSpec exposure(const char* prefix, double f) {
    return {Kind::exposure_scale, f, tag_for(prefix, f)};
}

}  // namespace

std::string_view to_string(Kind kind) noexcept {
    switch (kind) {
        case Kind::dynamic_range_compression: return "dynamic_range_compression";
        case Kind::exposure_scale: return "exposure_scale";
    }
    return "unknown";
}

Kind kind_from_string(std::string_view name) {
    if (name == "dynamic_range_compression") return Kind::dynamic_range_compression;
    if (name == "exposure_scale") return Kind::exposure_scale;
    throw Error(ErrorCode::InvalidParameter,
                "unknown augmentation kind '" + std::string(name) + "'");
}

void validate(const AugmentationSpec& spec) {
    if (!std::isfinite(spec.parameter)) {
        throw Error(ErrorCode::InvalidParameter, "augmentation parameter must be finite");
    }
    if (spec.kind == Kind::dynamic_range_compression &&
        !(spec.parameter > 0.0 && spec.parameter <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "compression factor must be in (0, 1]");
    }
    if (spec.kind == Kind::exposure_scale && !(spec.parameter > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "exposure factor must be positive");
    }
    if (spec.tag.empty()) {
        throw Error(ErrorCode::InvalidParameter, "augmentation tag must not be empty");
    }
    if (spec.tag == "orig") {
        throw Error(ErrorCode::DuplicateTag, "tag 'orig' is reserved for the original image");
    }
}

RgbImage compress_dynamic_range(const RgbImage& image, double c, Exec exec) {
    validate({Kind::dynamic_range_compression, c, "c"});
    return map_channels(image, [c](std::uint8_t v) { return compress_value(v, c); }, exec);
}

RgbImage scale_exposure(const RgbImage& image, double f, Exec exec) {
    validate({Kind::exposure_scale, f, "f"});
    return map_channels(image, [f](std::uint8_t v) { return exposure_value(v, f); }, exec);
}

RgbImage apply(const RgbImage& image, const AugmentationSpec& spec, Exec exec) {
    switch (spec.kind) {
        case Kind::dynamic_range_compression:
            return compress_dynamic_range(image, spec.parameter, exec);
        case Kind::exposure_scale:
            return scale_exposure(image, spec.parameter, exec);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown augmentation kind");
}

std::vector<Variant> generate_variants(const RgbImage& image,
                                       const std::vector<AugmentationSpec>& specs, Exec exec) {
    std::set<std::string> seen;
    for (const auto& spec : specs) {
        validate(spec);
        if (!seen.insert(spec.tag).second) {
            throw Error(ErrorCode::DuplicateTag, "duplicate augmentation tag '" + spec.tag + "'");
        }
    }
    std::vector<Variant> out;
    out.reserve(specs.size() + 1);
    out.push_back({"orig", image});
    for (const auto& spec : specs) out.push_back({spec.tag, apply(image, spec, exec)});
    return out;
}

std::vector<AugmentationSpec> dynamic_range_ladder() {
    return {compression(0.6), compression(0.4), compression(0.2)};
}

std::vector<AugmentationSpec> under_exposure_ladder() {
    return {exposure("ux", 0.5), exposure("ux", 0.3), exposure("ux", 0.15)};
}

std::vector<AugmentationSpec> over_exposure_ladder() {
    return {exposure("ox", 1.5), exposure("ox", 2.0), exposure("ox", 3.0)};
}

std::vector<AugmentationSpec> default_ladder() {
    auto specs = dynamic_range_ladder();
    auto under = under_exposure_ladder();
    specs.insert(specs.end(), under.begin(), under.end());
    return specs;
}

std::vector<AugmentationSpec> full_ladder() {
    auto specs = default_ladder();
    auto over = over_exposure_ladder();
    specs.insert(specs.end(), over.begin(), over.end());
    return specs;
}

std::vector<AugmentationSpec> named_ladder(std::string_view name) {
    if (name == "default") return default_ladder();
    if (name == "full") return full_ladder();
    if (name == "dynamic-range") return dynamic_range_ladder();
    if (name == "under-exposure") return under_exposure_ladder();
    if (name == "over-exposure") return over_exposure_ladder();
    if (name == "exposure") {
        auto specs = under_exposure_ladder();
        auto over = over_exposure_ladder();
        specs.insert(specs.end(), over.begin(), over.end());
        return specs;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown ladder '" + std::string(name) + "'");
}

}  // namespace fairqa::augment
