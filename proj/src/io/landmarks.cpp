#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fairqa/image_io.hpp"

namespace fairqa::io {

namespace {

using nlohmann::json;

regions::Point parse_point(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an [x, y] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(ErrorCode::MissingField, std::string("eye annotation lacks '") + key + "'");
    }
    return *it;
}

}  // namespace

std::vector<regions::EyeAnnotation> parse_landmarks(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("landmarks: ") + e.what());
    }
    const json* eyes = &doc;
    if (doc.is_object()) {
        auto it = doc.find("eyes");
        if (it == doc.end()) throw Error(ErrorCode::MissingField, "landmarks lack 'eyes'");
        eyes = &*it;
    }
    if (!eyes->is_array()) throw Error(ErrorCode::ParseError, "'eyes' must be an array");

    std::vector<regions::EyeAnnotation> out;
    for (const auto& e : *eyes) {
        if (!e.is_object()) throw Error(ErrorCode::ParseError, "eye annotation must be an object");
        regions::EyeAnnotation eye;
        const json& poly = require(e, "polygon");
        if (!poly.is_array()) throw Error(ErrorCode::ParseError, "'polygon' must be an array");
        for (const auto& p : poly) eye.polygon.push_back(parse_point(p, "polygon vertex"));
        eye.iris_center = parse_point(require(e, "iris_center"), "iris_center");
        const json& r = require(e, "iris_radius");
        if (!r.is_number()) throw Error(ErrorCode::ParseError, "'iris_radius' must be a number");
        eye.iris_radius = r.get<double>();
        out.push_back(std::move(eye));
    }
    return out;
}

std::vector<regions::EyeAnnotation> load_landmarks(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_landmarks(text.str());
}

void save_landmarks(const std::vector<regions::EyeAnnotation>& eyes,
                    const std::filesystem::path& path) {
    json arr = json::array();
    for (const auto& eye : eyes) {
        json poly = json::array();
        for (const auto& p : eye.polygon) poly.push_back({p.x, p.y});
        arr.push_back({{"polygon", poly},
                       {"iris_center", {eye.iris_center.x, eye.iris_center.y}},
                       {"iris_radius", eye.iris_radius}});
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << json{{"eyes", arr}}.dump(2) << '\n';
}

}  // namespace fairqa::io
