#include "povac/free_balls.hpp"

#include <cmath>
#include <stdexcept>

#include "povac/rng.hpp"

namespace povac {

FreeBallReport count_free_unit_balls(const SpatialIndex& idx,
                                     const ModelParams& params) {
    if (params.L < 2.0)
        throw std::invalid_argument("count_free_unit_balls: L must be >= 2");

    FreeBallReport report;
    report.d = params.d;
    report.L = params.L;
    report.N = params.N;
    report.nu = params.nu;

    const auto half = static_cast<std::int64_t>(std::floor(params.L / 2.0));
    const std::int64_t per_axis = 2 * half - 1; // centers in [-half+1, half-1]
    report.candidates = 1;
    for (int a = 0; a < params.d; ++a) report.candidates *= per_axis;

    report.c_theory = std::exp(-params.nu * std::pow(std::numbers::pi, 0.5 * params.d) *
                               std::pow(2.0, -params.d) /
                               std::tgamma(0.5 * params.d + 1.0));
    if (params.N >= 2) {
        const double cn = std::log(static_cast<double>(params.N));
        report.lemma_threshold = std::pow(params.L, params.d) /
                                 (cn * std::log(static_cast<double>(params.N)));
    }

    std::vector<std::int64_t> j(params.d, -half + 1);
    std::vector<double> center(params.d);
    while (true) {
        for (int a = 0; a < params.d; ++a) center[a] = static_cast<double>(j[a]);
        if (!idx.has_point_within(center, 0.5)) {
            ++report.B_N;
            report.free_centers.insert(report.free_centers.end(), j.begin(), j.end());
        }
        int a = params.d - 1;
        while (a >= 0) {
            if (++j[a] <= half - 1) break;
            j[a] = -half + 1;
            --a;
        }
        if (a < 0) break;
    }
    return report;
}

bool check_lemma_threshold(const FreeBallReport& report, double c_N,
                           std::int64_t N) {
    if (N < 2)
        throw std::invalid_argument("check_lemma_threshold: N must be >= 2 (ln N > 0)");
    if (!(c_N > 0.0))
        throw std::invalid_argument("check_lemma_threshold: c_N must be > 0");
    const double threshold =
        std::pow(report.L, report.d) / (c_N * std::log(static_cast<double>(N)));
    return static_cast<double>(report.B_N) >= threshold;
}

namespace {

/// Objective: radius of the largest point-free ball centered at x that
/// also fits inside the particle box.
double clearing_radius(const SpatialIndex& idx, std::span<const double> x,
                       double L) {
    double clearance = std::numeric_limits<double>::infinity();
    for (double c : x) clearance = std::min(clearance, 0.5 * L - std::abs(c));
    if (clearance < 0.0) clearance = 0.0;
    return std::min(idx.nearest_distance(x), clearance);
}

} // namespace

ClearingBall largest_clearing_ball(const SpatialIndex& idx,
                                   const ModelParams& params,
                                   std::int64_t probe_budget, std::uint64_t seed,
                                   std::uint64_t trial_id) {
    if (probe_budget < 1)
        throw std::invalid_argument("largest_clearing_ball: probe_budget must be >= 1");

    TrialRng rng(seed, trial_id, rng_stream::clearing);
    const int d = params.d;
    const double L = params.L;

    ClearingBall best;
    best.center.assign(d, 0.0);
    best.radius = -1.0;
    best.theory_radius = std::pow(
        static_cast<double>(d) * std::log(L) / (params.nu * params.omega_d),
        1.0 / d);

    std::vector<double> x(d), trial_point(d);
    for (std::int64_t start = 0; start < probe_budget; ++start) {
        if (start == 0) {
            std::fill(x.begin(), x.end(), 0.0); // center start covers the empty case
        } else {
            for (int a = 0; a < d; ++a) x[a] = L * (rng.next_double() - 0.5);
        }

        double value = clearing_radius(idx, x, L);
        double step = 0.25 * L;
        const double min_step = 1e-9 * L;
        while (step > min_step) {
            bool improved = false;
            for (int a = 0; a < d && !improved; ++a) {
                for (double dir : {+1.0, -1.0}) {
                    trial_point = x;
                    trial_point[a] += dir * step;
                    if (std::abs(trial_point[a]) > 0.5 * L) continue;
                    const double v = clearing_radius(idx, trial_point, L);
                    if (v > value) {
                        value = v;
                        x = trial_point;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }

        if (value > best.radius) {
            best.radius = value;
            best.center = x;
        }
    }
    best.radius = clearing_radius(idx, best.center, L);
    return best;
}

} // namespace povac
