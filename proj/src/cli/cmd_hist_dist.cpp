#include <filesystem>
#include <ostream>

#include <json.hpp>

#include "fairqa/cli.hpp"
#include "fairqa/dataset.hpp"
#include "fairqa/histmetrics.hpp"
#include "fairqa/image_io.hpp"

namespace fairqa::cli {

int cmd_hist_dist(const HistDistOptions& options, std::ostream& out, std::ostream& /*err*/) {
    histmetrics::ChiSquaredVariant variant;
    try {
        variant = histmetrics::chi_squared_variant_from_string(options.chi2_variant);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (options.min_region_pixels == 0) throw UsageError("--min-region-pixels must be positive");

    auto histogram_of = [&](const std::filesystem::path& image, const std::filesystem::path& mask) {
        const auto pixels =
            regions::apply_mask(io::load_image(image), io::load_mask(mask), options.min_region_pixels);
        return quality::histogram(pixels);
    };
    const auto a = histogram_of(options.image_a, options.mask_a);
    const auto b = histogram_of(options.image_b, options.mask_b);

    nlohmann::ordered_json result;
    result["chi_squared"] = histmetrics::chi_squared(a, b, variant);
    result["hellinger"] = histmetrics::hellinger(a, b);
    result["chi2_variant"] = options.chi2_variant;
    const auto text = result.dump(2) + "\n";
    if (options.out) {
        if (options.out->has_parent_path()) std::filesystem::create_directories(options.out->parent_path());
        dataset::write_text(*options.out, text);
    }
    out << text;
    return kExitOk;
}

}  // namespace fairqa::cli
