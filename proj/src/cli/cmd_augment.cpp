#include <exception>
#include <ostream>
#include <set>

#include <json.hpp>

#include "fairqa/augment.hpp"
#include "fairqa/cli.hpp"
#include "fairqa/dataset.hpp"
#include "fairqa/image_io.hpp"

namespace fairqa::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// JSON list of {kind, parameter, tag}.
std::vector<augment::AugmentationSpec> load_config(const fs::path& path) {
    json doc;
    try {
        doc = json::parse(dataset::read_text(path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("augmentation config: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::ParseError, "augmentation config must be a JSON list");
    std::vector<augment::AugmentationSpec> specs;
    for (const auto& entry : doc) {
        if (!entry.is_object()) throw Error(ErrorCode::ParseError, "augmentation entry must be an object");
        for (const char* key : {"kind", "parameter", "tag"}) {
            if (!entry.contains(key)) {
                throw Error(ErrorCode::MissingField, std::string("augmentation entry lacks '") + key + "'");
            }
        }
        if (!entry["kind"].is_string() || !entry["parameter"].is_number() || !entry["tag"].is_string()) {
            throw Error(ErrorCode::ParseError, "augmentation entry has a field of the wrong type");
        }
        specs.push_back({augment::kind_from_string(entry["kind"].get<std::string>()),
                         entry["parameter"].get<double>(), entry["tag"].get<std::string>()});
    }
    return specs;
}

std::string relative_to(const fs::path& target, const fs::path& base) {
    return fs::weakly_canonical(target).lexically_relative(fs::weakly_canonical(base)).generic_string();
}

}  // namespace

int cmd_augment(const AugmentOptions& options, std::ostream& out, std::ostream& /*err*/) {
    if (options.config && options.ladder) throw UsageError("--config and --ladder are exclusive");
    std::vector<augment::AugmentationSpec> specs;
    if (options.config) {
        specs = load_config(*options.config);
    } else {
        try {
            specs = augment::named_ladder(options.ladder.value_or("default"));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    std::set<std::string> tags;
    for (const auto& spec : specs) {
        augment::validate(spec);
        if (!tags.insert(spec.tag).second) {
            throw Error(ErrorCode::DuplicateTag, "duplicate augmentation tag '" + spec.tag + "'");
        }
    }

    const auto manifest = dataset::load_manifest(options.manifest);
    std::set<std::string> stems;
    for (const auto& s : manifest.samples) {
        const auto stem = fs::path(s.image_path).stem().string();
        if (!stems.insert(stem).second) {
            throw Error(ErrorCode::InvalidParameter,
                        "two samples share the image file name stem '" + stem + "'");
        }
    }
    fs::create_directories(options.out_dir);

    const auto n = static_cast<std::ptrdiff_t>(manifest.samples.size());
    std::vector<std::vector<dataset::Sample>> produced(manifest.samples.size());
    std::vector<std::exception_ptr> failures(manifest.samples.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            const auto& s = manifest.samples[i];
            const fs::path image_path(s.image_path);
            const auto image = io::load_image(manifest.resolve(s.image_path));
            for (auto& variant : augment::generate_variants(image, specs, Exec::serial)) {
                const auto file = image_path.stem().string() + "__" + variant.tag +
                                  image_path.extension().string();
                io::save_image(variant.image, options.out_dir / file);

                dataset::Sample v = s;
                v.variant_tag = variant.tag;
                v.image_path = file;
                if (variant.tag != "orig") {
                    v.sample_id = s.sample_id + "__" + variant.tag;
                    if (s.embedding_id) v.embedding_id = *s.embedding_id + "__" + variant.tag;
                }
                auto rebase = [&](std::optional<std::string>& p) {
                    if (p) p = relative_to(manifest.resolve(*p), options.out_dir);
                };
                rebase(v.skin_mask_path);
                rebase(v.sclera_mask_path);
                rebase(v.landmarks_path);
                produced[i].push_back(std::move(v));
            }
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }

    dataset::DatasetManifest extended;
    extended.base_dir = options.out_dir;
    std::set<std::string> ids;
    for (auto& batch : produced) {
        for (auto& s : batch) {
            if (!ids.insert(s.sample_id).second) {
                throw Error(ErrorCode::DuplicateSampleId,
                            "augmented sample id '" + s.sample_id + "' collides with an existing one");
            }
            extended.samples.push_back(std::move(s));
        }
    }
    const auto manifest_out = options.out_dir / "manifest.json";
    dataset::save_manifest(extended, manifest_out);
    out << "wrote " << extended.samples.size() << " images and " << manifest_out.string() << "\n";
    return kExitOk;
}

}  // namespace fairqa::cli
