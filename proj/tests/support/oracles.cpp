#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fairqa::oracle {

int luminance(Rgb p) {
    const long thousandths = 299L * p.r + 587L * p.g + 114L * p.b;
    int best = 0;
    long best_dist = -1;
    for (int level = 0; level <= 255; ++level) {
        const long dist = std::labs(1000L * level - thousandths);
        if (best_dist < 0 || dist <= best_dist) {
            best = level;
            best_dist = dist;
        }
        if (1000L * level > thousandths + 1000) break;
    }
    return best;
}

double entropy(std::span<const int> luminances) {
    std::map<int, long> counts;
    for (int l : luminances) ++counts[l];
    const double n = static_cast<double>(luminances.size());
    double acc = 0.0;
    for (const auto& [value, c] : counts) acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
    return std::log2(n) - acc / n;
}

int dynamic_range(std::span<const int> luminances) {
    const double h = entropy(luminances);
    return static_cast<int>(std::lround(100.0 / (1.0 + std::exp(5.0 - h))));
}

int band_score(std::span<const int> luminances, int lo, int hi) {
    const long n = static_cast<long>(luminances.size());
    long k = 0;
    for (int l : luminances) k += (l >= lo && l <= hi) ? 1 : 0;
    // Target value 100 (n - k) / n; compare candidates m via |100 (n - k) - m n|.
    int best = 0;
    long best_dist = -1;
    for (int m = 0; m <= 100; ++m) {
        const long dist = std::labs(100L * (n - k) - static_cast<long>(m) * n);
        if (best_dist < 0 || dist <= best_dist) {
            best = m;
            best_dist = dist;
        }
    }
    return best;
}

regions::RegionMask sclera_mask(std::span<const regions::EyeAnnotation> eyes, int width, int height) {
    regions::RegionMask mask(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double px = x + 0.5;
            const double py = y + 0.5;
            bool in_any = false;
            for (const auto& eye : eyes) {
                const auto& poly = eye.polygon;
                bool inside = false;
                for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
                    // Edge j -> i, written with j as the start point.
                    const auto& a = poly[j];
                    const auto& b = poly[i];
                    if ((a.y > py) != (b.y > py) &&
                        px < (b.x - a.x) * (py - a.y) / (b.y - a.y) + a.x) {
                        inside = !inside;
                    }
                }
                in_any = in_any || inside;
            }
            bool in_iris = false;
            for (const auto& eye : eyes) {
                const double d = std::hypot(px - eye.iris_center.x, py - eye.iris_center.y);
                if (!(d > eye.iris_radius)) in_iris = true;
            }
            mask.set(x, y, in_any && !in_iris);
        }
    }
    return mask;
}

double threshold(std::span<const double> similarities, double starting_error) {
    const std::size_t n = similarities.size();
    const auto k = static_cast<std::size_t>(std::floor(starting_error * static_cast<double>(n) + 1e-9));
    double best = 0.0;
    bool found = false;
    for (double t : similarities) {
        const auto at_or_below = static_cast<std::size_t>(
            std::count_if(similarities.begin(), similarities.end(), [t](double s) { return s <= t; }));
        if (at_or_below > k && (!found || t < best)) {
            best = t;
            found = true;
        }
    }
    return best;
}

std::vector<EdcPoint> edc(std::span<const edc::MatedPair> pairs, double starting_error,
                          std::span<const double> grid, std::size_t min_retained) {
    std::vector<double> sims;
    std::vector<double> quals;
    for (const auto& p : pairs) {
        sims.push_back(p.similarity);
        quals.push_back(p.pair_quality);
    }
    const double t = threshold(sims, starting_error);
    std::vector<EdcPoint> out;
    for (double d : grid) {
        // Quality cut uses the same lower-quantile rule as the threshold.
        const double cut = threshold(quals, d == 0.0 ? 0.0 : d);
        std::vector<edc::MatedPair> kept;
        for (const auto& p : pairs) {
            if (!(p.pair_quality < cut)) kept.push_back(p);
        }
        if (kept.size() < min_retained) break;
        std::size_t failing = 0;
        for (const auto& p : kept) failing += p.similarity < t ? 1 : 0;
        out.push_back({d, static_cast<double>(failing) / static_cast<double>(kept.size()), kept.size()});
    }
    return out;
}

double pauc(std::span<const double> xs, std::span<const double> ys, double limit) {
    auto value_at = [&](double x) {
        if (x >= xs.back()) return ys.back();
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (x <= xs[i]) {
                const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
                return ys[i - 1] + t * (ys[i] - ys[i - 1]);
            }
        }
        return ys.back();
    };
    std::vector<double> knots;
    for (double x : xs) {
        if (x < limit) knots.push_back(x);
    }
    knots.push_back(limit);
    double area = 0.0;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const double a = knots[i - 1];
        const double b = knots[i];
        area += (b - a) / 6.0 * (value_at(a) + 4.0 * value_at(0.5 * (a + b)) + value_at(b));
    }
    return area / limit;
}

double hellinger_bc(std::span<const double> p, std::span<const double> q) {
    double bc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) bc += std::sqrt(p[i] * q[i]);
    return std::sqrt(std::max(0.0, 1.0 - bc));
}

}  // namespace fairqa::oracle
