#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairqa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Invalid flag combination or value; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScoreOptions {
    std::filesystem::path manifest;
    std::string region = "both";
    std::optional<std::size_t> min_region_pixels;
    std::filesystem::path out;
    std::optional<std::filesystem::path> rejects;
    double max_reject_rate = 0.5;
};

struct AugmentOptions {
    std::filesystem::path manifest;
    std::optional<std::filesystem::path> config;
    std::optional<std::string> ladder;
    std::filesystem::path out_dir;
};

struct HistDistOptions {
    std::filesystem::path image_a;
    std::filesystem::path mask_a;
    std::filesystem::path image_b;
    std::filesystem::path mask_b;
    std::string chi2_variant = "symmetric";
    std::size_t min_region_pixels = 1;
    std::optional<std::filesystem::path> out;
};

struct EdcOptions {
    std::filesystem::path manifest;
    std::filesystem::path scores;
    std::filesystem::path embeddings;
    std::string region = "both";
    std::string group = "all";
    std::string component = "dynamic_range";
    double starting_error = 0.05;
    double pauc_limit = 0.20;
    double grid_step = 0.05;
    std::size_t min_retained = 10;
    std::filesystem::path out_prefix;
};

// Each command returns an exit code; domain errors propagate as fairqa::Error
// and usage problems as UsageError. run() maps both to exit codes.
int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err);
int cmd_augment(const AugmentOptions& options, std::ostream& out, std::ostream& err);
int cmd_hist_dist(const HistDistOptions& options, std::ostream& out, std::ostream& err);
int cmd_edc(const EdcOptions& options, std::ostream& out, std::ostream& err);

/// Output file paths written by cmd_edc for one region.
std::filesystem::path edc_csv_path(const std::filesystem::path& prefix, const std::string& region);
std::filesystem::path edc_json_path(const std::filesystem::path& prefix, const std::string& region);
/// Default rejects path: `<out stem>.rejects.csv` beside the scores file.
std::filesystem::path default_rejects_path(const std::filesystem::path& scores_out);

/// Full command line (args[0] is the program name). Exit codes: 0 success,
/// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairqa::cli
