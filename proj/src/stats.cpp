#include "povac/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace povac {

double percentile_nearest_rank(std::span<const double> xs, double pct) {
    if (xs.empty()) throw std::invalid_argument("percentile: empty input");
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<std::int64_t>(sorted.size());
    auto rank = static_cast<std::int64_t>(
        std::ceil(pct / 100.0 * static_cast<double>(n)));
    rank = std::clamp<std::int64_t>(rank, 1, n);
    return sorted[static_cast<std::size_t>(rank - 1)];
}

SampleSummary summarize(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("summarize: empty input");
    SampleSummary s;
    s.n = static_cast<std::int64_t>(xs.size());
    double sum = 0.0;
    for (double v : xs) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    double ss = 0.0;
    for (double v : xs) {
        const double dv = v - s.mean;
        ss += dv * dv;
    }
    s.variance = s.n > 1 ? ss / static_cast<double>(s.n - 1) : 0.0;
    s.stderr_ = s.n > 0 ? std::sqrt(s.variance / static_cast<double>(s.n)) : 0.0;

    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    auto nr = [&](double pct) {
        auto rank = static_cast<std::int64_t>(
            std::ceil(pct / 100.0 * static_cast<double>(s.n)));
        rank = std::clamp<std::int64_t>(rank, 1, s.n);
        return sorted[static_cast<std::size_t>(rank - 1)];
    };
    s.p50 = nr(50.0);
    s.p90 = nr(90.0);
    s.p99 = nr(99.0);
    s.p100 = sorted.back();
    return s;
}

ScalingFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("fit_linear: length mismatch");
    if (xs.size() < 2)
        throw std::invalid_argument("fit_linear: need at least 2 points");

    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_linear: degenerate x values");

    ScalingFit f;
    f.x.assign(xs.begin(), xs.end());
    f.y.assign(ys.begin(), ys.end());
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss_res += r * r;
    }
    if (syy == 0.0) {
        f.r_squared = 1.0; // constant y fitted exactly by slope 0
    } else {
        f.r_squared = 1.0 - ss_res / syy;
        f.r_squared = std::clamp(f.r_squared, 0.0, 1.0);
    }
    f.residual_stderr =
        xs.size() > 2 ? std::sqrt(ss_res / (n - 2.0)) : 0.0;
    return f;
}

} // namespace povac
