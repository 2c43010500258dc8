#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fairqa/dataset.hpp"
#include "fairqa/image.hpp"
#include "fairqa/regions.hpp"

namespace fairqa::synth {

inline constexpr Rgb kDarkSkin{104, 72, 56};
inline constexpr Rgb kLightSkin{224, 186, 162};

struct FaceParams {
    int width = 128;
    int height = 144;
    Rgb skin_tone = kLightSkin;
    /// Standard deviation of the per-pixel luminance texture on the skin.
    double skin_texture = 10.0;
    std::uint64_t seed = 1;
};

/// A frontal face-like image with its skin mask, sclera mask and the eye
/// annotations the sclera mask was rasterized from. The skin mask excludes
/// the eyes and the mouth.
struct SyntheticFace {
    RgbImage image;
    regions::RegionMask skin_mask;
    regions::RegionMask sclera_mask;
    std::vector<regions::EyeAnnotation> eyes;
};

SyntheticFace make_face(const FaceParams& params);

/// Multiplies the channels of masked pixels by `factor`, rounding and clamping.
RgbImage scale_region(const RgbImage& image, const regions::RegionMask& mask, double factor);

struct FixtureOptions {
    int subjects = 4;
    int images_per_subject = 1;
    std::uint64_t seed = 1;
};

/// Writes images, skin masks, sclera masks and landmark files plus
/// `manifest.json` into `dir`. Subjects alternate between the "dark" and
/// "light" groups. Even subjects reference a sclera mask file, odd subjects
/// only landmarks.
dataset::DatasetManifest write_fixture(const std::filesystem::path& dir,
                                       const FixtureOptions& options = {});

/// Degradation severity in [0, 1] read from a variant tag ("orig", "dr0.4",
/// "ux0.3", "ox2", ...). Unknown tags count as undegraded.
double tag_severity(std::string_view tag);

/// One embedding per manifest sample: a per-subject identity direction plus
/// Gaussian noise that grows with the sample's degradation severity, so mated
/// similarity falls as quality falls.
dataset::EmbeddingStore make_embeddings(const dataset::DatasetManifest& manifest,
                                        std::size_t dimension = 64, std::uint64_t seed = 7);

}  // namespace fairqa::synth
