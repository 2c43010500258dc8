#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairqa {

enum class ErrorCode {
    EmptyRegion,
    DimensionMismatch,
    RegionTooSmall,
    ZeroAreaMask,
    InvalidPolygon,
    InvalidParameter,
    DuplicateTag,
    IoError,
    ParseError,
    DuplicateSampleId,
    MissingField,
    MissingRegionSource,
    ZeroVector,
    LengthMismatch,
    MissingEmbedding,
    MissingQuality,
    EmptyInput,
    AllDiscarded,
    InsufficientPoints,
};

/// Stable identifier for an error code, e.g. "ZeroAreaMask". Used verbatim in
/// rejects files and CLI diagnostics.
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every fairqa module. Carries a machine-readable code
/// alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fairqa
