#include "fairqa/error.hpp"

namespace fairqa {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyRegion: return "EmptyRegion";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::RegionTooSmall: return "RegionTooSmall";
        case ErrorCode::ZeroAreaMask: return "ZeroAreaMask";
        case ErrorCode::InvalidPolygon: return "InvalidPolygon";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::DuplicateTag: return "DuplicateTag";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateSampleId: return "DuplicateSampleId";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::MissingRegionSource: return "MissingRegionSource";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::MissingEmbedding: return "MissingEmbedding";
        case ErrorCode::MissingQuality: return "MissingQuality";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::AllDiscarded: return "AllDiscarded";
        case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fairqa
