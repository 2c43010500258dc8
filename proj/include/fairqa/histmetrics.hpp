#pragma once

#include <string_view>

#include "fairqa/quality.hpp"

namespace fairqa::histmetrics {

enum class ChiSquaredVariant {
    /// 0.5 * sum (p - q)^2 / (p + q). Symmetric, in [0, 1].
    symmetric,
    /// sum (p - q)^2 / q. Unbounded and not symmetric.
    pearson,
};

std::string_view to_string(ChiSquaredVariant variant) noexcept;
/// "symmetric" or "pearson"; throws InvalidParameter otherwise.
ChiSquaredVariant chi_squared_variant_from_string(std::string_view name);

/// Bins whose denominator is zero contribute nothing.
double chi_squared(const quality::LuminanceHistogram& p, const quality::LuminanceHistogram& q,
                   ChiSquaredVariant variant = ChiSquaredVariant::symmetric);

/// sqrt(1 - BC(p, q)), evaluated as sqrt(0.5 * sum (sqrt p - sqrt q)^2) so that
/// identical inputs give exactly 0.
double hellinger(const quality::LuminanceHistogram& p, const quality::LuminanceHistogram& q);

}  // namespace fairqa::histmetrics
