#include <exception>
#include <filesystem>
#include <ostream>

#include "fairqa/cli.hpp"
#include "fairqa/dataset.hpp"
#include "fairqa/image_io.hpp"
#include "fairqa/regions.hpp"

namespace fairqa::cli {

namespace {

using dataset::RegionSource;

struct SampleOutcome {
    std::vector<dataset::ScoreRecord> scores;
    std::vector<dataset::RejectRecord> rejects;
    std::exception_ptr fatal;
};

regions::RegionMask region_mask(const dataset::DatasetManifest& manifest, const dataset::Sample& s,
                                RegionSource region, const RgbImage& image) {
    if (region == RegionSource::skin) {
        if (!s.skin_mask_path) {
            throw Error(ErrorCode::MissingRegionSource, "no skin_mask_path");
        }
        return io::load_mask(manifest.resolve(*s.skin_mask_path));
    }
    if (s.sclera_mask_path) return io::load_mask(manifest.resolve(*s.sclera_mask_path));
    if (s.landmarks_path) {
        const auto eyes = io::load_landmarks(manifest.resolve(*s.landmarks_path));
        return regions::sclera_mask_from_landmarks(eyes, image.width(), image.height(), Exec::serial);
    }
    throw Error(ErrorCode::MissingRegionSource, "neither sclera_mask_path nor landmarks_path");
}

std::size_t min_pixels(const ScoreOptions& options, RegionSource region) {
    if (options.min_region_pixels) return *options.min_region_pixels;
    return region == RegionSource::skin ? regions::kDefaultMinSkinPixels
                                        : regions::kDefaultMinScleraPixels;
}

SampleOutcome score_sample(const dataset::DatasetManifest& manifest, const dataset::Sample& s,
                           const std::vector<RegionSource>& wanted, const ScoreOptions& options) {
    SampleOutcome outcome;
    try {
        RgbImage image;
        try {
            image = io::load_image(manifest.resolve(s.image_path));
        } catch (const Error& e) {
            for (auto region : wanted) outcome.rejects.push_back({s.sample_id, region, e.code(), e.what()});
            return outcome;
        }
        for (auto region : wanted) {
            try {
                const auto mask = region_mask(manifest, s, region, image);
                const auto pixels = regions::apply_mask(image, mask, min_pixels(options, region));
                outcome.scores.push_back({s.sample_id, region, quality::assess(pixels, Exec::serial)});
            } catch (const Error& e) {
                outcome.rejects.push_back({s.sample_id, region, e.code(), e.what()});
            }
        }
    } catch (...) {
        outcome.fatal = std::current_exception();
    }
    return outcome;
}

}  // namespace

int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err) {
    if (!(options.max_reject_rate >= 0.0 && options.max_reject_rate <= 1.0)) {
        throw UsageError("--max-reject-rate must lie in [0, 1]");
    }
    if (options.min_region_pixels && *options.min_region_pixels == 0) {
        throw UsageError("--min-region-pixels must be positive");
    }
    std::vector<RegionSource> wanted;
    if (options.region == "skin" || options.region == "both") wanted.push_back(RegionSource::skin);
    if (options.region == "sclera" || options.region == "both") wanted.push_back(RegionSource::sclera);
    if (wanted.empty()) throw UsageError("--region must be skin, sclera or both");

    const auto manifest = dataset::load_manifest(options.manifest);
    const auto n = static_cast<std::ptrdiff_t>(manifest.samples.size());
    std::vector<SampleOutcome> outcomes(manifest.samples.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        outcomes[i] = score_sample(manifest, manifest.samples[i], wanted, options);
    }

    std::vector<dataset::ScoreRecord> scores;
    std::vector<dataset::RejectRecord> rejects;
    for (auto& o : outcomes) {
        if (o.fatal) std::rethrow_exception(o.fatal);
        scores.insert(scores.end(), o.scores.begin(), o.scores.end());
        rejects.insert(rejects.end(), o.rejects.begin(), o.rejects.end());
    }

    const std::size_t attempted = manifest.samples.size() * wanted.size();
    const auto rejects_path = options.rejects ? *options.rejects : default_rejects_path(options.out);
    for (const auto& path : {options.out, rejects_path}) {
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    }
    dataset::write_scores(scores, options.out);
    dataset::write_rejects(rejects, rejects_path);

    out << "scored " << scores.size() << " of " << attempted << " (sample, region) rows; "
        << rejects.size() << " rejected -> " << rejects_path.string() << "\n";
    const double rate = attempted == 0 ? 0.0 : static_cast<double>(rejects.size()) / attempted;
    if (rate > options.max_reject_rate) {
        err << "error: reject rate " << rate << " exceeds --max-reject-rate "
            << options.max_reject_rate << "\n";
        for (const auto& r : rejects) {
            err << "  " << r.sample_id << " [" << dataset::to_string(r.region) << "] " << r.detail << "\n";
        }
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace fairqa::cli
