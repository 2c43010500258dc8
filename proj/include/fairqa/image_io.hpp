#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fairqa/image.hpp"
#include "fairqa/regions.hpp"

namespace fairqa::io {

/// Decodes any format OpenCV reads (PNG, JPEG, ...) into RGB. Throws IoError.
RgbImage load_image(const std::filesystem::path& path);
/// Format chosen by extension. Throws IoError.
void save_image(const RgbImage& image, const std::filesystem::path& path);

/// Single-channel 8-bit mask; a pixel is in the region iff its value > 127.
/// Colour files are converted to grayscale first. Throws IoError.
regions::RegionMask load_mask(const std::filesystem::path& path);
/// Writes 255 for set pixels and 0 otherwise.
void save_mask(const regions::RegionMask& mask, const std::filesystem::path& path);

inline constexpr int kMaskThreshold = 127;

/// Landmark JSON: {"eyes": [{"polygon": [[x, y], ...], "iris_center": [x, y],
/// "iris_radius": r}, ...]}. A bare array of eyes is accepted too.
/// Throws ParseError / MissingField; geometry is validated later.
std::vector<regions::EyeAnnotation> parse_landmarks(const std::string& json_text);
std::vector<regions::EyeAnnotation> load_landmarks(const std::filesystem::path& path);
void save_landmarks(const std::vector<regions::EyeAnnotation>& eyes,
                    const std::filesystem::path& path);

}  // namespace fairqa::io
