#include "fairqa/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "fairqa/error.hpp"

namespace fairqa::cli {

std::filesystem::path edc_csv_path(const std::filesystem::path& prefix, const std::string& region) {
    return std::filesystem::path(prefix.string() + "_" + region + "_edc.csv");
}

std::filesystem::path edc_json_path(const std::filesystem::path& prefix, const std::string& region) {
    return std::filesystem::path(prefix.string() + "_" + region + "_summary.json");
}

std::filesystem::path default_rejects_path(const std::filesystem::path& scores_out) {
    auto p = scores_out;
    p.replace_extension();
    return std::filesystem::path(p.string() + ".rejects.csv");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skin-tone-agnostic face image quality components and EDC evaluation", "fairqa"};
    app.require_subcommand(1);

    ScoreOptions score;
    auto* score_cmd = app.add_subcommand("score", "Score face-skin and/or sclera regions of every manifest sample");
    score_cmd->add_option("--manifest", score.manifest, "Dataset manifest JSON")->required();
    score_cmd->add_option("--region", score.region, "Region source")
        ->check(CLI::IsMember({"skin", "sclera", "both"}));
    score_cmd->add_option("--min-region-pixels", score.min_region_pixels,
                          "Minimum region size (default 256 skin, 32 sclera)");
    score_cmd->add_option("--out", score.out, "Scores CSV")->required();
    score_cmd->add_option("--rejects", score.rejects, "Rejects CSV (default <out>.rejects.csv)");
    score_cmd->add_option("--max-reject-rate", score.max_reject_rate,
                          "Fail when the rejected fraction of (sample, region) rows exceeds this")
        ->check(CLI::Range(0.0, 1.0));

    AugmentOptions augment;
    auto* augment_cmd = app.add_subcommand("augment", "Write dynamic-range and exposure variants of every sample");
    augment_cmd->add_option("--manifest", augment.manifest, "Dataset manifest JSON")->required();
    auto* config_opt = augment_cmd->add_option("--config", augment.config, "Augmentation list JSON");
    augment_cmd->add_option("--ladder", augment.ladder,
                            "Built-in ladder: default, full, dynamic-range, under-exposure, over-exposure, exposure")
        ->excludes(config_opt);
    augment_cmd->add_option("--out-dir", augment.out_dir, "Output directory")->required();

    HistDistOptions hist;
    auto* hist_cmd = app.add_subcommand("hist-dist", "Chi-squared and Hellinger distance between two regions' luminance histograms");
    hist_cmd->add_option("--image-a", hist.image_a)->required();
    hist_cmd->add_option("--mask-a", hist.mask_a)->required();
    hist_cmd->add_option("--image-b", hist.image_b)->required();
    hist_cmd->add_option("--mask-b", hist.mask_b)->required();
    hist_cmd->add_option("--chi2-variant", hist.chi2_variant)
        ->check(CLI::IsMember({"symmetric", "pearson"}));
    hist_cmd->add_option("--min-region-pixels", hist.min_region_pixels)->check(CLI::PositiveNumber);
    hist_cmd->add_option("--out", hist.out, "Also write the JSON result here");

    EdcOptions edc;
    auto* edc_cmd = app.add_subcommand("edc", "Error-vs-discard curves and pAUC per region for one group");
    edc_cmd->add_option("--manifest", edc.manifest)->required();
    edc_cmd->add_option("--scores", edc.scores)->required();
    edc_cmd->add_option("--embeddings", edc.embeddings)->required();
    edc_cmd->add_option("--region", edc.region)->check(CLI::IsMember({"skin", "sclera", "both"}));
    edc_cmd->add_option("--group", edc.group, "Group label or 'all'");
    edc_cmd->add_option("--component", edc.component, "Quality component driving the discard order")
        ->check(CLI::IsMember({"dynamic_range", "under_exposure", "over_exposure"}));
    edc_cmd->add_option("--starting-error", edc.starting_error);
    edc_cmd->add_option("--pauc-limit", edc.pauc_limit);
    edc_cmd->add_option("--grid-step", edc.grid_step);
    edc_cmd->add_option("--min-retained", edc.min_retained)->check(CLI::PositiveNumber);
    edc_cmd->add_option("--out-prefix", edc.out_prefix)->required();

    std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        }
        return kExitUsage;
    }

    try {
        if (*score_cmd) return cmd_score(score, out, err);
        if (*augment_cmd) return cmd_augment(augment, out, err);
        if (*hist_cmd) return cmd_hist_dist(hist, out, err);
        if (*edc_cmd) return cmd_edc(edc, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: IoError: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace fairqa::cli
