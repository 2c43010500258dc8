#include "fairqa/histmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fairqa::histmetrics {

std::string_view to_string(ChiSquaredVariant variant) noexcept {
    switch (variant) {
        case ChiSquaredVariant::symmetric: return "symmetric";
        case ChiSquaredVariant::pearson: return "pearson";
    }
    return "unknown";
}

ChiSquaredVariant chi_squared_variant_from_string(std::string_view name) {
    if (name == "symmetric") return ChiSquaredVariant::symmetric;
    if (name == "pearson") return ChiSquaredVariant::pearson;
    throw Error(ErrorCode::InvalidParameter,
                "unknown chi-squared variant '" + std::string(name) + "'");
}

double chi_squared(const quality::LuminanceHistogram& p, const quality::LuminanceHistogram& q,
                   ChiSquaredVariant variant) {
    double sum = 0.0;
    for (int i = 0; i < quality::kLevels; ++i) {
        const double pi = p[i];
        const double qi = q[i];
        const double diff = pi - qi;
        const double denom = variant == ChiSquaredVariant::symmetric ? pi + qi : qi;
        if (denom > 0.0) sum += diff * diff / denom;
    }
    if (variant == ChiSquaredVariant::symmetric) return std::min(0.5 * sum, 1.0);
    return sum;
}

double hellinger(const quality::LuminanceHistogram& p, const quality::LuminanceHistogram& q) {
    double sum = 0.0;
    for (int i = 0; i < quality::kLevels; ++i) {
        const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        sum += d * d;
    }
    return std::min(std::sqrt(0.5 * sum), 1.0);
}

}  // namespace fairqa::histmetrics
