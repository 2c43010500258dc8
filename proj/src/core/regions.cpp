#include "fairqa/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fairqa::regions {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// p is collinear with [a, b]; is it within the segment's bounding box?
bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int d1 = sign(cross(c, d, a));
    const int d2 = sign(cross(c, d, b));
    const int d3 = sign(cross(a, b, c));
    const int d4 = sign(cross(a, b, d));
    if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

struct Edge {
    Point a;
    Point b;
};

// Fills one row of the mask: even-odd crossings of the row's center line,
// then removes iris discs.
void rasterize_row(std::span<const EyeAnnotation> eyes, const std::vector<std::vector<Edge>>& edges,
                   int y, int width, std::uint8_t* row, std::vector<double>& xs) {
    const double yc = y + 0.5;
    for (std::size_t e = 0; e < eyes.size(); ++e) {
        xs.clear();
        for (const auto& edge : edges[e]) {
            const Point& pi = edge.a;
            const Point& pj = edge.b;
            if ((pi.y > yc) != (pj.y > yc)) {
                xs.push_back((pj.x - pi.x) * (yc - pi.y) / (pj.y - pi.y) + pi.x);
            }
        }
        if (xs.empty()) continue;
        std::sort(xs.begin(), xs.end());
        // Center xc is inside iff an odd number of crossings satisfy xc < x_k.
        std::size_t k = 0;
        for (int x = 0; x < width; ++x) {
            const double xc = x + 0.5;
            while (k < xs.size() && !(xc < xs[k])) ++k;
            if ((xs.size() - k) % 2 == 1) row[x] = 1;
        }
    }
    for (const auto& eye : eyes) {
        const double dy = yc - eye.iris_center.y;
        const double r2 = eye.iris_radius * eye.iris_radius;
        if (dy * dy > r2) continue;
        for (int x = 0; x < width; ++x) {
            if (!row[x]) continue;
            const double dx = x + 0.5 - eye.iris_center.x;
            if (dx * dx + dy * dy <= r2) row[x] = 0;
        }
    }
}

}  // namespace

RegionMask::RegionMask(int width, int height, bool fill) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
        throw Error(ErrorCode::InvalidParameter, "mask dimensions must be positive");
    }
    bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                 fill ? 1 : 0);
}

std::size_t RegionMask::popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool is_simple_polygon(std::span<const Point> poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (a == b) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point& c = poly[j];
            const Point& d = poly[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segments_intersect(a, b, c, d)) return false;
                continue;
            }
            // Adjacent edges share one vertex; they must not fold back onto each other.
            const Point& shared = (j == i + 1) ? b : a;
            const Point& other_ab = (j == i + 1) ? a : b;
            const Point& other_cd = (j == i + 1) ? d : c;
            if (sign(cross(shared, other_ab, other_cd)) == 0) {
                const double dot = (other_ab.x - shared.x) * (other_cd.x - shared.x) +
                                   (other_ab.y - shared.y) * (other_cd.y - shared.y);
                if (dot > 0.0) return false;
            }
        }
    }
    return true;
}

void validate_eye(const EyeAnnotation& eye) {
    if (eye.polygon.size() < 4) {
        throw Error(ErrorCode::InvalidPolygon,
                    "eye polygon needs at least 4 points, got " +
                        std::to_string(eye.polygon.size()));
    }
    for (const auto& p : eye.polygon) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorCode::InvalidPolygon, "eye polygon has a non-finite coordinate");
        }
    }
    if (!is_simple_polygon(eye.polygon)) {
        throw Error(ErrorCode::InvalidPolygon, "eye polygon is self-intersecting");
    }
    if (!(eye.iris_radius > 0.0) || !std::isfinite(eye.iris_radius)) {
        throw Error(ErrorCode::InvalidParameter, "iris radius must be positive");
    }
    if (!std::isfinite(eye.iris_center.x) || !std::isfinite(eye.iris_center.y)) {
        throw Error(ErrorCode::InvalidParameter, "iris center must be finite");
    }
}

void validate_mask(const RegionMask& mask, std::size_t min_region_pixels) {
    const std::size_t n = mask.popcount();
    if (n == 0) {
        throw Error(ErrorCode::ZeroAreaMask, "region mask selects no pixels");
    }
    if (n < min_region_pixels) {
        throw Error(ErrorCode::RegionTooSmall,
                    "region has " + std::to_string(n) + " pixels, minimum is " +
                        std::to_string(min_region_pixels));
    }
}

quality::PixelRegion apply_mask(const RgbImage& image, const RegionMask& mask,
                                std::size_t min_region_pixels) {
    if (image.width() != mask.width() || image.height() != mask.height()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "image is " + std::to_string(image.width()) + "x" +
                        std::to_string(image.height()) + " but mask is " +
                        std::to_string(mask.width()) + "x" + std::to_string(mask.height()));
    }
    validate_mask(mask, min_region_pixels);
    const auto px = image.pixels();
    const auto bits = mask.bits();
    std::vector<Rgb> selected;
    selected.reserve(mask.popcount());
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (bits[i]) selected.push_back(px[i]);
    }
    return quality::PixelRegion(std::move(selected));
}

RegionMask sclera_mask_from_landmarks(std::span<const EyeAnnotation> eyes, int width, int height,
                                      Exec exec) {
    if (eyes.empty()) {
        throw Error(ErrorCode::InvalidParameter, "at least one eye annotation is required");
    }
    for (const auto& eye : eyes) validate_eye(eye);

    std::vector<std::vector<Edge>> edges(eyes.size());
    for (std::size_t e = 0; e < eyes.size(); ++e) {
        const auto& poly = eyes[e].polygon;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            edges[e].push_back({poly[i], poly[(i + 1) % poly.size()]});
        }
    }

    RegionMask mask(width, height);
    auto bits = mask.bits();
    const bool parallel =
        exec == Exec::parallel &&
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) >= kParallelGrain;
    if (parallel) {
#pragma omp parallel
        {
            std::vector<double> xs;
#pragma omp for schedule(static)
            for (int y = 0; y < height; ++y) {
                rasterize_row(eyes, edges, y, width,
                              bits.data() + static_cast<std::size_t>(y) * width, xs);
            }
        }
    } else {
        std::vector<double> xs;
        for (int y = 0; y < height; ++y) {
            rasterize_row(eyes, edges, y, width,
                          bits.data() + static_cast<std::size_t>(y) * width, xs);
        }
    }
    return mask;
}

}  // namespace fairqa::regions
