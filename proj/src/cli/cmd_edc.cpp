#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

#include "fairqa/cli.hpp"
#include "fairqa/dataset.hpp"
#include "fairqa/edc.hpp"

namespace fairqa::cli {

namespace {

using dataset::RegionSource;

int component_value(const quality::QualityComponents& c, const std::string& component) {
    if (component == "dynamic_range") return c.dynamic_range.value();
    if (component == "under_exposure") return c.under_exposure.value();
    return c.over_exposure.value();
}

}  // namespace

int cmd_edc(const EdcOptions& options, std::ostream& out, std::ostream& /*err*/) {
    if (!(options.starting_error > 0.0 && options.starting_error < 1.0)) {
        throw UsageError("--starting-error must lie in (0, 1)");
    }
    if (!(options.pauc_limit > 0.0 && options.pauc_limit <= 1.0)) {
        throw UsageError("--pauc-limit must lie in (0, 1]");
    }
    if (!(options.grid_step > 0.0 && options.grid_step < 1.0)) {
        throw UsageError("--grid-step must lie in (0, 1) so the grid has a point above 0 and below 1");
    }
    if (options.component != "dynamic_range" && options.component != "under_exposure" &&
        options.component != "over_exposure") {
        throw UsageError("unknown component '" + options.component + "'");
    }
    std::vector<RegionSource> wanted;
    if (options.region == "skin" || options.region == "both") wanted.push_back(RegionSource::skin);
    if (options.region == "sclera" || options.region == "both") wanted.push_back(RegionSource::sclera);
    if (wanted.empty()) throw UsageError("--region must be skin, sclera or both");
    if (options.min_retained == 0) throw UsageError("--min-retained must be positive");

    const auto manifest = dataset::load_manifest(options.manifest);
    if (options.group != "all") {
        const auto groups = manifest.groups();
        if (std::find(groups.begin(), groups.end(), options.group) == groups.end()) {
            throw UsageError("unknown group '" + options.group + "'");
        }
    }
    const auto samples = manifest.select_group(options.group);
    const auto scores = dataset::read_scores(options.scores);
    const auto embeddings = dataset::load_embeddings(options.embeddings);

    std::map<std::pair<std::string, RegionSource>, quality::QualityComponents> by_key;
    for (const auto& r : scores) by_key[{r.sample_id, r.region}] = r.components;

    std::vector<edc::PairingSample> pairing;
    pairing.reserve(samples.size());
    for (const auto& s : samples) {
        pairing.push_back({s.sample_id, s.subject_id, embeddings.at(s.embedding_key())});
    }
    const auto grid = edc::discard_grid(options.grid_step);

    struct Result {
        std::string region;
        edc::EdcCurve curve;
        dataset::EdcSummary summary;
    };
    std::vector<Result> results;
    for (auto region : wanted) {
        std::map<std::string, double> qualities;
        for (const auto& s : samples) {
            auto it = by_key.find({s.sample_id, region});
            if (it == by_key.end()) {
                throw Error(ErrorCode::MissingQuality,
                            "no " + std::string(dataset::to_string(region)) + " score for sample '" +
                                s.sample_id + "'");
            }
            qualities[s.sample_id] = component_value(it->second, options.component);
        }
        const auto pairs = edc::build_mated_pairs(pairing, qualities);
        auto curve = edc::edc_curve(pairs, options.starting_error, grid, options.min_retained);

        dataset::EdcSummary summary;
        summary.threshold = curve.threshold;
        summary.starting_error = options.starting_error;
        summary.realized_starting_error = curve.error_rates.front();
        summary.pauc = edc::pauc(curve, options.pauc_limit);
        summary.pauc_limit = options.pauc_limit;
        summary.pairs = curve.pair_count;
        summary.region = std::string(dataset::to_string(region));
        summary.group = options.group;
        summary.component = options.component;
        results.push_back({summary.region, std::move(curve), summary});
    }

    if (options.out_prefix.has_parent_path()) {
        std::filesystem::create_directories(options.out_prefix.parent_path());
    }
    for (const auto& r : results) {
        dataset::write_text(edc_csv_path(options.out_prefix, r.region), dataset::edc_to_csv(r.curve));
        dataset::write_text(edc_json_path(options.out_prefix, r.region),
                            dataset::edc_summary_to_json(r.summary));
        out << r.region << ": pairs=" << r.summary.pairs << " threshold=" << r.summary.threshold
            << " start=" << r.summary.realized_starting_error << " pauc@" << r.summary.pauc_limit
            << "=" << r.summary.pauc << "\n";
    }
    return kExitOk;
}

}  // namespace fairqa::cli
