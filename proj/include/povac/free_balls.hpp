#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "povac/params.hpp"
#include "povac/spatial_index.hpp"

namespace povac {

/// Census of Poisson-free unit-diameter balls centered at the integer
/// lattice points with coordinates in [-floor(L/2)+1, floor(L/2)-1].
/// Center spacing 1 equals the sum of the radii, so the ball interiors are
/// pairwise disjoint and freeness events are independent across balls.
struct FreeBallReport {
    int d = 0;
    double L = 0.0;
    std::int64_t N = 0;
    double nu = 0.0;
    std::int64_t B_N = 0;        ///< free-ball count
    std::int64_t candidates = 0; ///< (2 floor(L/2) - 1)^d
    double c_theory = 0.0;       ///< per-ball void probability
    double lemma_threshold = 0.0; ///< L^d / (c_N ln N) with the default c_N = ln N
    std::vector<std::int64_t> free_centers; ///< flat integer coords, lex order
};

FreeBallReport count_free_unit_balls(const SpatialIndex& idx,
                                     const ModelParams& params);

/// True iff B_N >= L^d / (c_N ln N). Rejects N < 2.
bool check_lemma_threshold(const FreeBallReport& report, double c_N,
                           std::int64_t N);

/// A Poisson-free ball inside the particle box.
struct ClearingBall {
    std::vector<double> center;
    double radius = 0.0;        ///< exact for the returned center
    double theory_radius = 0.0; ///< (d ln L / (nu omega_d))^{1/d}
};

/// Multi-start compass ascent on min(nearest_distance, box clearance).
/// The result is a lower bound on the true largest clearing radius.
ClearingBall largest_clearing_ball(const SpatialIndex& idx,
                                   const ModelParams& params,
                                   std::int64_t probe_budget, std::uint64_t seed,
                                   std::uint64_t trial_id = 0);

} // namespace povac
