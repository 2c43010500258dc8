#include "fairqa/edc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairqa/error.hpp"

namespace fairqa::edc {

namespace {

// Absorbs representation error in products like 0.29 * 100.
constexpr double kRankEps = 1e-9;

std::size_t lower_rank(double fraction, std::size_t n) {
    const auto rank = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + kRankEps));
    return std::min(rank, n - 1);
}

void check_starting_error(double e) {
    if (!(e > 0.0 && e < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "starting error must lie in (0, 1)");
    }
}

void check_grid(std::span<const double> grid) {
    if (grid.empty()) throw Error(ErrorCode::InvalidParameter, "discard grid is empty");
    if (grid.front() != 0.0) {
        throw Error(ErrorCode::InvalidParameter, "discard grid must start at 0");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] < 1.0)) {
            throw Error(ErrorCode::InvalidParameter, "discard fractions must lie in [0, 1)");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw Error(ErrorCode::InvalidParameter, "discard grid must be strictly increasing");
        }
    }
}

}  // namespace

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorCode::LengthMismatch, "embedding lengths differ or are zero");
    }
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::ZeroVector, "all-zero embedding");
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::vector<MatedPair> build_mated_pairs(std::span<const PairingSample> samples,
                                         const std::map<std::string, double>& qualities) {
    std::vector<std::string> subject_order;
    std::map<std::string, std::vector<const PairingSample*>> by_subject;
    for (const auto& s : samples) {
        if (s.embedding.empty()) {
            throw Error(ErrorCode::MissingEmbedding, "no embedding for sample '" + s.sample_id + "'");
        }
        if (!qualities.contains(s.sample_id)) {
            throw Error(ErrorCode::MissingQuality, "no quality score for sample '" + s.sample_id + "'");
        }
        auto& bucket = by_subject[s.subject_id];
        if (bucket.empty()) subject_order.push_back(s.subject_id);
        bucket.push_back(&s);
    }

    std::vector<MatedPair> pairs;
    for (const auto& subject : subject_order) {
        const auto& members = by_subject[subject];
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const auto& a = *members[i];
                const auto& b = *members[j];
                pairs.push_back({a.sample_id, b.sample_id,
                                 cosine_similarity(a.embedding, b.embedding),
                                 std::min(qualities.at(a.sample_id), qualities.at(b.sample_id))});
            }
        }
    }
    return pairs;
}

double calibrate_threshold(std::span<const double> similarities, double starting_error) {
    if (similarities.empty()) throw Error(ErrorCode::EmptyInput, "no similarity scores");
    check_starting_error(starting_error);
    std::vector<double> sorted(similarities.begin(), similarities.end());
    const std::size_t rank = lower_rank(starting_error, sorted.size());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank), sorted.end());
    return sorted[rank];
}

double fnmr_at(std::span<const MatedPair> pairs, double threshold) {
    if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "no mated pairs");
    const auto below = std::count_if(pairs.begin(), pairs.end(),
                                     [threshold](const MatedPair& p) { return p.similarity < threshold; });
    return static_cast<double>(below) / static_cast<double>(pairs.size());
}

std::vector<double> discard_grid(double step) {
    if (!(step > 0.0 && step < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "grid step must lie in (0, 1)");
    }
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
        // Snapped to 1e-12 so that 3 * 0.05 reads back as 0.15.
        const double d = std::round(static_cast<double>(k) * step * 1e12) / 1e12;
        if (d >= 1.0 - kRankEps) break;
        grid.push_back(d);
    }
    return grid;
}

EdcCurve edc_curve(std::span<const MatedPair> pairs, double starting_error,
                   std::span<const double> grid, std::size_t min_retained, Exec exec) {
    if (pairs.size() < 2) throw Error(ErrorCode::EmptyInput, "EDC needs at least two mated pairs");
    check_starting_error(starting_error);
    check_grid(grid);

    const std::size_t n = pairs.size();
    std::vector<double> similarities(n);
    for (std::size_t i = 0; i < n; ++i) similarities[i] = pairs[i].similarity;

    EdcCurve curve;
    curve.threshold = calibrate_threshold(similarities, starting_error);
    curve.starting_error = starting_error;
    curve.pair_count = n;

    // Pairs ordered by quality; the retained set at any fraction is a suffix.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pairs[a].pair_quality < pairs[b].pair_quality;
    });
    // below_from[k]: failing pairs among order[k..n).
    std::vector<std::size_t> below_from(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) {
        below_from[k] = below_from[k + 1] + (pairs[order[k]].similarity < curve.threshold ? 1 : 0);
    }

    const auto points = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<std::size_t> retained(grid.size());
    std::vector<double> errors(grid.size());
    auto evaluate = [&](std::ptrdiff_t g) {
        const double cut = pairs[order[lower_rank(grid[g], n)]].pair_quality;
        // First position whose quality is not strictly below the cut.
        const auto first = static_cast<std::size_t>(
            std::partition_point(order.begin(), order.end(),
                                 [&](std::size_t i) { return pairs[i].pair_quality < cut; }) -
            order.begin());
        retained[g] = n - first;
        errors[g] = static_cast<double>(below_from[first]) / static_cast<double>(retained[g]);
    };
    if (exec == Exec::parallel && grid.size() * n >= kParallelGrain) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t g = 0; g < points; ++g) evaluate(g);
    } else {
        for (std::ptrdiff_t g = 0; g < points; ++g) evaluate(g);
    }

    for (std::size_t g = 0; g < grid.size(); ++g) {
        if (retained[g] < min_retained) break;
        curve.discard_fractions.push_back(grid[g]);
        curve.error_rates.push_back(errors[g]);
        curve.retained_pairs.push_back(retained[g]);
    }
    if (curve.discard_fractions.empty()) {
        throw Error(ErrorCode::AllDiscarded,
                    "fewer than " + std::to_string(min_retained) + " pairs retained at zero discard");
    }
    return curve;
}

double pauc(const EdcCurve& curve, double limit) {
    if (!(limit > 0.0 && limit <= 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "pAUC limit must lie in (0, 1]");
    }
    const auto& xs = curve.discard_fractions;
    const auto& ys = curve.error_rates;
    const double tol = 1e-12;
    std::size_t inside = 0;
    while (inside < xs.size() && xs[inside] <= limit + tol) ++inside;
    if (inside < 2) {
        throw Error(ErrorCode::InsufficientPoints,
                    "pAUC needs at least two curve points within the discard limit");
    }
    double area = 0.0;
    for (std::size_t i = 1; i < inside; ++i) {
        area += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
    }
    const double last_x = xs[inside - 1];
    const double last_y = ys[inside - 1];
    if (last_x < limit - tol) {
        double end_y = last_y;
        if (inside < xs.size()) {
            const double t = (limit - last_x) / (xs[inside] - last_x);
            end_y = last_y + t * (ys[inside] - last_y);
        }
        area += 0.5 * (last_y + end_y) * (limit - last_x);
    }
    return area / limit;
}

}  // namespace fairqa::edc
