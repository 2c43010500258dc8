#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairqa/edc.hpp"
#include "fairqa/error.hpp"
#include "fairqa/quality.hpp"

namespace fairqa::dataset {

struct Sample {
    std::string sample_id;
    std::string subject_id;
    std::string group_label = "unlabeled";
    std::string variant_tag = "orig";
    std::string image_path;
    std::optional<std::string> skin_mask_path;
    std::optional<std::string> sclera_mask_path;
    std::optional<std::string> landmarks_path;
    std::optional<std::string> embedding_id;

    /// embedding_id when present, sample_id otherwise.
    const std::string& embedding_key() const { return embedding_id ? *embedding_id : sample_id; }

    friend bool operator==(const Sample&, const Sample&) = default;
};

/// Samples plus the directory that relative paths inside them refer to.
struct DatasetManifest {
    std::filesystem::path base_dir;
    std::vector<Sample> samples;

    std::filesystem::path resolve(const std::string& path) const;
    const Sample* find(const std::string& sample_id) const;
    /// Distinct group labels in order of first appearance.
    std::vector<std::string> groups() const;
    /// "all" selects every sample.
    std::vector<Sample> select_group(const std::string& label) const;
};

/// Validates: required fields (sample_id, subject_id, image_path) present and
/// non-empty, unique sample ids, identifiers free of ',', '"' and newlines.
/// Throws ParseError, MissingField or DuplicateSampleId.
DatasetManifest parse_manifest(const std::string& json_text, std::filesystem::path base_dir);
DatasetManifest load_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const DatasetManifest& manifest);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

/// Embedding vectors keyed by id; all of one dimension, none all-zero.
class EmbeddingStore {
public:
    /// Throws DimensionMismatch, ZeroVector or ParseError (duplicate id).
    void insert(const std::string& id, std::vector<double> vector);

    std::size_t size() const noexcept { return vectors_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    bool contains(const std::string& id) const { return vectors_.contains(id); }
    /// Throws MissingEmbedding.
    std::span<const double> at(const std::string& id) const;
    const std::map<std::string, std::vector<double>>& vectors() const noexcept { return vectors_; }

private:
    std::size_t dimension_ = 0;
    std::map<std::string, std::vector<double>> vectors_;
};

/// CSV rows `embedding_id,v0,v1,...`; an optional header row starting with
/// `embedding_id` is skipped.
EmbeddingStore parse_embeddings(const std::string& csv_text);
EmbeddingStore load_embeddings(const std::filesystem::path& path);
/// Writes a header row followed by one row per id in id order.
void save_embeddings(const EmbeddingStore& store, const std::filesystem::path& path);

enum class RegionSource { skin, sclera };
std::string_view to_string(RegionSource region) noexcept;
/// "skin" or "sclera"; throws InvalidParameter.
RegionSource region_from_string(std::string_view name);

struct ScoreRecord {
    std::string sample_id;
    RegionSource region = RegionSource::skin;
    quality::QualityComponents components;

    friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

/// Header `sample_id,region,dynamic_range,under_exposure,over_exposure`, rows
/// sorted by sample id then region name.
std::string scores_to_csv(std::vector<ScoreRecord> records);
void write_scores(std::vector<ScoreRecord> records, const std::filesystem::path& path);
std::vector<ScoreRecord> parse_scores(const std::string& csv_text);
std::vector<ScoreRecord> read_scores(const std::filesystem::path& path);

struct RejectRecord {
    std::string sample_id;
    RegionSource region = RegionSource::skin;
    ErrorCode reason = ErrorCode::IoError;
    std::string detail;
};

/// Header `sample_id,region,reason,detail`; detail is quoted.
void write_rejects(std::vector<RejectRecord> records, const std::filesystem::path& path);

/// Shortest round-trip decimal representation.
std::string format_number(double value);

/// `discard,error` rows.
std::string edc_to_csv(const edc::EdcCurve& curve);

struct EdcSummary {
    double threshold = 0.0;
    double starting_error = 0.0;
    double realized_starting_error = 0.0;
    double pauc = 0.0;
    double pauc_limit = 0.0;
    std::size_t pairs = 0;
    std::string region;
    std::string group;
    std::string component;
};
std::string edc_summary_to_json(const EdcSummary& summary);

/// Writes text with LF line endings exactly as given. Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace fairqa::dataset
