#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace povac {

struct SampleSummary {
    std::int64_t n = 0;
    double mean = 0.0;
    double variance = 0.0; ///< unbiased
    double stderr_ = 0.0;
    double p50 = 0.0, p90 = 0.0, p99 = 0.0, p100 = 0.0;
};

/// Mean, unbiased variance, standard error and nearest-rank percentiles.
/// Rejects empty input.
SampleSummary summarize(std::span<const double> xs);

/// Nearest-rank percentile: the ceil(pct/100 * n)-th smallest value.
double percentile_nearest_rank(std::span<const double> xs, double pct);

struct ScalingFit {
    std::vector<double> x, y;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double residual_stderr = 0.0;
};

/// Ordinary least squares; exact on affine data. Rejects inputs without
/// at least two distinct x values.
ScalingFit fit_linear(std::span<const double> xs, std::span<const double> ys);

inline double binomial_stderr(double p_hat, std::int64_t n) {
    return n > 0 ? std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n)) : 0.0;
}

} // namespace povac
