#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairqa/exec.hpp"
#include "fairqa/image.hpp"
#include "fairqa/quality.hpp"

namespace fairqa::regions {

inline constexpr std::size_t kDefaultMinSkinPixels = 256;
inline constexpr std::size_t kDefaultMinScleraPixels = 32;

/// Binary per-pixel region membership, row-major, one byte per pixel (0 or 1).
class RegionMask {
public:
    RegionMask() = default;
    RegionMask(int width, int height, bool fill = false);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    bool test(int x, int y) const { return bits_[index(x, y)] != 0; }
    void set(int x, int y, bool value = true) { bits_[index(x, y)] = value ? 1 : 0; }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::span<std::uint8_t> bits() noexcept { return bits_; }

    std::size_t popcount() const noexcept;

    friend bool operator==(const RegionMask&, const RegionMask&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Eye outline plus iris disc in pixel coordinates. The sclera is the part of
/// the outline not covered by the iris.
struct EyeAnnotation {
    std::vector<Point> polygon;
    Point iris_center;
    double iris_radius = 0.0;

    friend bool operator==(const EyeAnnotation&, const EyeAnnotation&) = default;
};

/// True if no two edges of the closed polygon intersect other than adjacent
/// edges at their shared vertex.
bool is_simple_polygon(std::span<const Point> polygon);

/// Throws InvalidPolygon (fewer than 4 points, repeated vertices, or
/// self-intersection) or InvalidParameter (iris radius not positive).
void validate_eye(const EyeAnnotation& eye);

/// Throws ZeroAreaMask when empty and RegionTooSmall below `min_region_pixels`.
void validate_mask(const RegionMask& mask, std::size_t min_region_pixels);

/// Pixels where `mask` is set, in row-major order.
quality::PixelRegion apply_mask(const RgbImage& image, const RegionMask& mask,
                                std::size_t min_region_pixels = 1);

/// Pixel (x, y) is set iff its center (x + 0.5, y + 0.5) lies inside some eye
/// polygon under the even-odd rule and farther than iris_radius from every
/// iris center. Polygon parts outside the image are clipped.
RegionMask sclera_mask_from_landmarks(std::span<const EyeAnnotation> eyes, int width,
                                      int height, Exec exec = Exec::parallel);

}  // namespace fairqa::regions
