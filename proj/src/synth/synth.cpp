#include "fairqa/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "fairqa/image_io.hpp"

namespace fairqa::synth {

namespace {

std::uint8_t to_channel(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
}

Rgb shade(Rgb base, double gain, double offset, double jitter_r, double jitter_g, double jitter_b) {
    return {to_channel(base.r * gain + offset + jitter_r), to_channel(base.g * gain + offset + jitter_g),
            to_channel(base.b * gain + offset + jitter_b)};
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool inside_ellipse(double x, double y, double cx, double cy, double rx, double ry) {
    const double dx = (x - cx) / rx;
    const double dy = (y - cy) / ry;
    return dx * dx + dy * dy <= 1.0;
}

}  // namespace

SyntheticFace make_face(const FaceParams& params) {
    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);

    const int w = params.width;
    const int h = params.height;
    const double cx = w * 0.5;
    const double cy = h * 0.52;
    const double rx = w * 0.38;
    const double ry = h * 0.42;

    SyntheticFace face;
    face.image = RgbImage(w, h);
    face.skin_mask = regions::RegionMask(w, h);

    const double eye_dx = rx * 0.40;
    const double eye_y = cy - ry * 0.22;
    const double hw = w * 0.10;
    const double hh = h * 0.042;
    for (int side : {-1, 1}) {
        const double ex = cx + side * eye_dx + jitter(rng);
        const double ey = eye_y + 0.5 * jitter(rng);
        regions::EyeAnnotation eye;
        eye.polygon = {{ex - hw, ey},          {ex - hw * 0.5, ey - hh}, {ex + hw * 0.5, ey - hh},
                       {ex + hw, ey},          {ex + hw * 0.5, ey + hh}, {ex - hw * 0.5, ey + hh}};
        eye.iris_center = {ex + 1.5 * jitter(rng), ey + 0.3 * jitter(rng)};
        eye.iris_radius = h * 0.03;
        face.eyes.push_back(std::move(eye));
    }
    face.sclera_mask = regions::sclera_mask_from_landmarks(face.eyes, w, h, Exec::serial);

    const double mouth_cy = cy + ry * 0.55;
    const Rgb background{72, 92, 112};
    const Rgb sclera{236, 230, 224};
    const Rgb iris{74, 48, 36};
    const Rgb lips{150, 70, 76};

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double px = x + 0.5;
            const double py = y + 0.5;
            const double n = unit(rng);
            const double nr = unit(rng);
            const double ng = unit(rng);
            const double nb = unit(rng);

            bool near_eye = false;
            bool in_iris = false;
            for (const auto& eye : face.eyes) {
                const double ex = 0.5 * (eye.polygon[0].x + eye.polygon[3].x);
                const double ey = eye.polygon[0].y;
                if (std::abs(px - ex) <= hw + 2.0 && std::abs(py - ey) <= hh + 2.0) near_eye = true;
                const double dx = px - eye.iris_center.x;
                const double dy = py - eye.iris_center.y;
                if (std::abs(px - ex) <= hw && std::abs(py - ey) <= hh &&
                    dx * dx + dy * dy <= eye.iris_radius * eye.iris_radius) {
                    in_iris = true;
                }
            }

            Rgb& out = face.image.at(x, y);
            if (face.sclera_mask.test(x, y)) {
                out = shade(sclera, 1.0, 4.0 * n, nr, ng, nb);
            } else if (in_iris) {
                out = shade(iris, 1.0, 6.0 * n, nr, ng, nb);
            } else if (inside_ellipse(px, py, cx, cy, rx, ry)) {
                if (inside_ellipse(px, py, cx, mouth_cy, rx * 0.28, h * 0.045)) {
                    out = shade(lips, 1.0, 5.0 * n, nr, ng, nb);
                } else if (near_eye) {
                    out = shade(params.skin_tone, 0.8, 3.0 * n, nr, ng, nb);
                } else {
                    const double dx = (px - cx) / rx;
                    const double dy = (py - cy) / ry;
                    const double gain = 0.78 + 0.30 * (1.0 - std::min(1.0, dx * dx + dy * dy));
                    out = shade(params.skin_tone, gain, params.skin_texture * n, 2 * nr, 2 * ng, 2 * nb);
                    face.skin_mask.set(x, y);
                }
            } else {
                out = shade(background, 1.0, 6.0 * n, nr, ng, nb);
            }
        }
    }
    return face;
}

RgbImage scale_region(const RgbImage& image, const regions::RegionMask& mask, double factor) {
    if (image.width() != mask.width() || image.height() != mask.height()) {
        throw Error(ErrorCode::DimensionMismatch, "image and mask sizes differ");
    }
    RgbImage out = image;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            if (!mask.test(x, y)) continue;
            Rgb& p = out.at(x, y);
            p = {to_channel(p.r * factor), to_channel(p.g * factor), to_channel(p.b * factor)};
        }
    }
    return out;
}

dataset::DatasetManifest write_fixture(const std::filesystem::path& dir,
                                       const FixtureOptions& options) {
    std::filesystem::create_directories(dir);
    dataset::DatasetManifest manifest;
    manifest.base_dir = dir;
    std::mt19937_64 rng(options.seed);
    for (int s = 0; s < options.subjects; ++s) {
        const bool dark = s % 2 == 0;
        char subject[32];
        std::snprintf(subject, sizeof subject, "subj%02d", s);
        for (int i = 0; i < options.images_per_subject; ++i) {
            FaceParams params;
            params.skin_tone = dark ? kDarkSkin : kLightSkin;
            params.seed = rng();
            const SyntheticFace face = make_face(params);

            const std::string stem = std::string(subject) + "_img" + std::to_string(i);
            io::save_image(face.image, dir / (stem + ".png"));
            io::save_mask(face.skin_mask, dir / (stem + "_skin.png"));
            io::save_landmarks(face.eyes, dir / (stem + "_eyes.json"));

            dataset::Sample sample;
            sample.sample_id = stem;
            sample.subject_id = subject;
            sample.group_label = dark ? "dark" : "light";
            sample.image_path = stem + ".png";
            sample.skin_mask_path = stem + "_skin.png";
            sample.landmarks_path = stem + "_eyes.json";
            if (s % 2 == 0) {
                io::save_mask(face.sclera_mask, dir / (stem + "_sclera.png"));
                sample.sclera_mask_path = stem + "_sclera.png";
            }
            manifest.samples.push_back(std::move(sample));
        }
    }
    dataset::save_manifest(manifest, dir / "manifest.json");
    return manifest;
}

double tag_severity(std::string_view tag) {
    auto number = [&](std::size_t skip) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tag.data() + skip, tag.data() + tag.size(), v);
        return (ec == std::errc() && ptr == tag.data() + tag.size()) ? v : -1.0;
    };
    if (tag.starts_with("dr") || tag.starts_with("ux")) {
        const double v = number(2);
        return v > 0.0 && v <= 1.0 ? 1.0 - v : 0.0;
    }
    if (tag.starts_with("ox")) {
        const double v = number(2);
        return v >= 1.0 ? std::min(1.0, (v - 1.0) / 2.0) : 0.0;
    }
    return 0.0;
}

dataset::EmbeddingStore make_embeddings(const dataset::DatasetManifest& manifest,
                                        std::size_t dimension, std::uint64_t seed) {
    dataset::EmbeddingStore store;
    for (const auto& s : manifest.samples) {
        std::normal_distribution<double> identity_unit(0.0, 1.0);
        std::normal_distribution<double> noise_unit(0.0, 1.0);
        std::mt19937_64 identity_rng(seed ^ fnv1a(s.subject_id));
        std::mt19937_64 noise_rng(seed ^ fnv1a(s.embedding_key()) ^ 0x9e3779b97f4a7c15ull);
        const double sigma = 0.25 + 1.5 * tag_severity(s.variant_tag);
        std::vector<double> v(dimension);
        double norm = 0.0;
        for (auto& x : v) {
            x = identity_unit(identity_rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        // Identity on the unit sphere, noise per coordinate scaled to the same order.
        const double per_coord = sigma / std::sqrt(static_cast<double>(dimension));
        for (auto& x : v) x = x / norm + per_coord * noise_unit(noise_rng);
        store.insert(s.embedding_key(), std::move(v));
    }
    return store;
}

}  // namespace fairqa::synth
