#include "fairqa/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fairqa::dataset {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check_identifier(const std::string& value, const char* field) {
    if (value.find_first_of(",\"\n\r") != std::string::npos) {
        throw Error(ErrorCode::ParseError,
                    std::string(field) + " '" + value + "' contains a reserved character");
    }
}

std::string required_string(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null() || (it->is_string() && it->get<std::string>().empty())) {
        throw Error(ErrorCode::MissingField,
                    "sample " + std::to_string(index) + " lacks '" + key + "'");
    }
    if (!it->is_string()) {
        throw Error(ErrorCode::ParseError,
                    "sample " + std::to_string(index) + ": '" + key + "' must be a string");
    }
    return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string() || it->get<std::string>().empty()) {
        throw Error(ErrorCode::ParseError,
                    "sample " + std::to_string(index) + ": '" + key + "' must be a non-empty string");
    }
    return it->get<std::string>();
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.emplace_back(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

double parse_double(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": '" + field + "' is not a number");
    }
    return value;
}

int parse_score(const std::string& field, std::size_t line_no) {
    int value = 0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0 || value > 100) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": '" + field + "' is not a score in [0,100]");
    }
    return value;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else if (c == '\n' || c == '\r') out += ' ';
        else out += c;
    }
    return out + "\"";
}

}  // namespace

std::filesystem::path DatasetManifest::resolve(const std::string& path) const {
    const std::filesystem::path p(path);
    return p.is_absolute() ? p : base_dir / p;
}

const Sample* DatasetManifest::find(const std::string& sample_id) const {
    for (const auto& s : samples) {
        if (s.sample_id == sample_id) return &s;
    }
    return nullptr;
}

std::vector<std::string> DatasetManifest::groups() const {
    std::vector<std::string> out;
    for (const auto& s : samples) {
        if (std::find(out.begin(), out.end(), s.group_label) == out.end()) out.push_back(s.group_label);
    }
    return out;
}

std::vector<Sample> DatasetManifest::select_group(const std::string& label) const {
    if (label == "all") return samples;
    std::vector<Sample> out;
    std::copy_if(samples.begin(), samples.end(), std::back_inserter(out),
                 [&](const Sample& s) { return s.group_label == label; });
    return out;
}

DatasetManifest parse_manifest(const std::string& json_text, std::filesystem::path base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("manifest: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "manifest must be a JSON object");
    auto it = doc.find("samples");
    if (it == doc.end()) throw Error(ErrorCode::MissingField, "manifest lacks 'samples'");
    if (!it->is_array()) throw Error(ErrorCode::ParseError, "'samples' must be an array");

    DatasetManifest manifest;
    manifest.base_dir = std::move(base_dir);
    std::set<std::string> ids;
    std::size_t index = 0;
    for (const auto& entry : *it) {
        if (!entry.is_object()) {
            throw Error(ErrorCode::ParseError, "sample " + std::to_string(index) + " is not an object");
        }
        Sample s;
        s.sample_id = required_string(entry, "sample_id", index);
        s.subject_id = required_string(entry, "subject_id", index);
        s.image_path = required_string(entry, "image_path", index);
        if (auto g = optional_string(entry, "group_label", index)) s.group_label = *g;
        if (auto v = optional_string(entry, "variant_tag", index)) s.variant_tag = *v;
        s.skin_mask_path = optional_string(entry, "skin_mask_path", index);
        s.sclera_mask_path = optional_string(entry, "sclera_mask_path", index);
        s.landmarks_path = optional_string(entry, "landmarks_path", index);
        s.embedding_id = optional_string(entry, "embedding_id", index);
        check_identifier(s.sample_id, "sample_id");
        check_identifier(s.subject_id, "subject_id");
        check_identifier(s.group_label, "group_label");
        if (s.embedding_id) check_identifier(*s.embedding_id, "embedding_id");
        if (s.group_label == "all") {
            throw Error(ErrorCode::ParseError, "group label 'all' is reserved");
        }
        if (!ids.insert(s.sample_id).second) {
            throw Error(ErrorCode::DuplicateSampleId, "duplicate sample_id '" + s.sample_id + "'");
        }
        manifest.samples.push_back(std::move(s));
        ++index;
    }
    return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_text(path), path.parent_path());
}

std::string manifest_to_json(const DatasetManifest& manifest) {
    ordered_json samples = ordered_json::array();
    for (const auto& s : manifest.samples) {
        ordered_json j;
        j["sample_id"] = s.sample_id;
        j["subject_id"] = s.subject_id;
        j["group_label"] = s.group_label;
        j["variant_tag"] = s.variant_tag;
        j["image_path"] = s.image_path;
        if (s.skin_mask_path) j["skin_mask_path"] = *s.skin_mask_path;
        if (s.sclera_mask_path) j["sclera_mask_path"] = *s.sclera_mask_path;
        if (s.landmarks_path) j["landmarks_path"] = *s.landmarks_path;
        if (s.embedding_id) j["embedding_id"] = *s.embedding_id;
        samples.push_back(std::move(j));
    }
    ordered_json doc;
    doc["samples"] = std::move(samples);
    return doc.dump(2) + "\n";
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    write_text(path, manifest_to_json(manifest));
}

void EmbeddingStore::insert(const std::string& id, std::vector<double> vector) {
    if (vector.empty()) throw Error(ErrorCode::DimensionMismatch, "embedding '" + id + "' is empty");
    if (dimension_ == 0) dimension_ = vector.size();
    if (vector.size() != dimension_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "embedding '" + id + "' has dimension " + std::to_string(vector.size()) +
                        ", store has " + std::to_string(dimension_));
    }
    if (std::all_of(vector.begin(), vector.end(), [](double v) { return v == 0.0; })) {
        throw Error(ErrorCode::ZeroVector, "embedding '" + id + "' is all zero");
    }
    if (!vectors_.emplace(id, std::move(vector)).second) {
        throw Error(ErrorCode::ParseError, "duplicate embedding id '" + id + "'");
    }
}

std::span<const double> EmbeddingStore::at(const std::string& id) const {
    auto it = vectors_.find(id);
    if (it == vectors_.end()) throw Error(ErrorCode::MissingEmbedding, "no embedding '" + id + "'");
    return it->second;
}

EmbeddingStore parse_embeddings(const std::string& csv_text) {
    EmbeddingStore store;
    const auto lines = lines_of(csv_text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto fields = split(lines[i], ',');
        if (i == 0 && fields[0] == "embedding_id") continue;
        if (fields.size() < 2 || fields[0].empty()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + ": malformed embedding row");
        }
        std::vector<double> v;
        v.reserve(fields.size() - 1);
        for (std::size_t k = 1; k < fields.size(); ++k) v.push_back(parse_double(fields[k], i + 1));
        store.insert(fields[0], std::move(v));
    }
    return store;
}

EmbeddingStore load_embeddings(const std::filesystem::path& path) {
    return parse_embeddings(read_text(path));
}

void save_embeddings(const EmbeddingStore& store, const std::filesystem::path& path) {
    std::string out = "embedding_id";
    for (std::size_t k = 0; k < store.dimension(); ++k) out += ",v" + std::to_string(k);
    out += '\n';
    for (const auto& [id, v] : store.vectors()) {
        out += id;
        for (double x : v) out += "," + format_number(x);
        out += '\n';
    }
    write_text(path, out);
}

std::string_view to_string(RegionSource region) noexcept {
    return region == RegionSource::skin ? "skin" : "sclera";
}

RegionSource region_from_string(std::string_view name) {
    if (name == "skin") return RegionSource::skin;
    if (name == "sclera") return RegionSource::sclera;
    throw Error(ErrorCode::InvalidParameter, "unknown region '" + std::string(name) + "'");
}

std::string scores_to_csv(std::vector<ScoreRecord> records) {
    std::sort(records.begin(), records.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
        if (a.sample_id != b.sample_id) return a.sample_id < b.sample_id;
        return to_string(a.region) < to_string(b.region);
    });
    std::string out = "sample_id,region,dynamic_range,under_exposure,over_exposure\n";
    for (const auto& r : records) {
        out += r.sample_id;
        out += ',';
        out += to_string(r.region);
        out += ',' + std::to_string(r.components.dynamic_range.value());
        out += ',' + std::to_string(r.components.under_exposure.value());
        out += ',' + std::to_string(r.components.over_exposure.value());
        out += '\n';
    }
    return out;
}

void write_scores(std::vector<ScoreRecord> records, const std::filesystem::path& path) {
    write_text(path, scores_to_csv(std::move(records)));
}

std::vector<ScoreRecord> parse_scores(const std::string& csv_text) {
    const auto lines = lines_of(csv_text);
    if (lines.empty() || lines[0] != "sample_id,region,dynamic_range,under_exposure,over_exposure") {
        throw Error(ErrorCode::ParseError, "scores file lacks the expected header");
    }
    std::vector<ScoreRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != 5) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + ": expected 5 fields");
        }
        ScoreRecord r;
        r.sample_id = fields[0];
        try {
            r.region = region_from_string(fields[1]);
        } catch (const Error&) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + ": unknown region");
        }
        r.components = {quality::QualityScore(parse_score(fields[2], i + 1)),
                        quality::QualityScore(parse_score(fields[3], i + 1)),
                        quality::QualityScore(parse_score(fields[4], i + 1))};
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ScoreRecord> read_scores(const std::filesystem::path& path) {
    return parse_scores(read_text(path));
}

void write_rejects(std::vector<RejectRecord> records, const std::filesystem::path& path) {
    std::sort(records.begin(), records.end(), [](const RejectRecord& a, const RejectRecord& b) {
        if (a.sample_id != b.sample_id) return a.sample_id < b.sample_id;
        return to_string(a.region) < to_string(b.region);
    });
    std::string out = "sample_id,region,reason,detail\n";
    for (const auto& r : records) {
        out += r.sample_id + "," + std::string(to_string(r.region)) + "," +
               std::string(fairqa::to_string(r.reason)) + "," + csv_quote(r.detail) + "\n";
    }
    write_text(path, out);
}

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string edc_to_csv(const edc::EdcCurve& curve) {
    std::string out = "discard,error\n";
    for (std::size_t i = 0; i < curve.discard_fractions.size(); ++i) {
        out += format_number(curve.discard_fractions[i]) + "," + format_number(curve.error_rates[i]) + "\n";
    }
    return out;
}

std::string edc_summary_to_json(const EdcSummary& s) {
    ordered_json j;
    j["threshold"] = s.threshold;
    j["starting_error"] = s.starting_error;
    j["realized_starting_error"] = s.realized_starting_error;
    j["pauc"] = s.pauc;
    j["pauc_limit"] = s.pauc_limit;
    j["pairs"] = s.pairs;
    j["region"] = s.region;
    j["group"] = s.group;
    j["component"] = s.component;
    return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

}  // namespace fairqa::dataset
