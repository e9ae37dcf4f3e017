#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "povac/stats.hpp"
#include "povac/vacancy.hpp"

namespace povac {

/// Connected components of the vacant lattice under 2d nearest-neighbor
/// adjacency. Cluster ids are canonical: the smallest linear vertex index
/// contained in the cluster.
struct ClusterLabeling {
    int d = 0;
    double spacing = 0.0;
    std::vector<std::int64_t> jmin, jmax, shape, strides;
    /// Per linear vertex: the cluster id, or -1 for occupied vertices.
    std::vector<std::int64_t> root;
    /// (cluster id, vertex count), sorted by id.
    std::vector<std::pair<std::int64_t, std::int64_t>> cluster_sizes;
    std::int64_t n_clusters = 0;
    std::int64_t n_vacant = 0;

    bool in_extent(std::span<const std::int64_t> j) const {
        for (int a = 0; a < d; ++a)
            if (j[a] < jmin[a] || j[a] > jmax[a]) return false;
        return true;
    }
    std::int64_t linear_index(std::span<const std::int64_t> j) const {
        std::int64_t idx = 0;
        for (int a = 0; a < d; ++a) idx += (j[a] - jmin[a]) * strides[a];
        return idx;
    }
};

/// Union-find labeling with path compression. The optional Moore mode
/// ((3^d - 1)-neighbor adjacency) exists for sensitivity checks only.
ClusterLabeling label_components(const OccupancyGrid& grid,
                                 bool moore_adjacency = false);

/// 0 for occupied vertices, cluster vertex count otherwise. Rejects
/// vertices outside the grid extent.
std::int64_t cluster_size_at(const ClusterLabeling& labeling,
                             std::span<const std::int64_t> vertex);

struct ClusterStats {
    std::int64_t A_N = 0;            ///< largest cluster vertex count
    double volume_upper = 0.0;       ///< s^d * A_N
    double volume_mc = 0.0;          ///< Monte Carlo refinement, NaN until filled
    std::int64_t largest_id = -1;    ///< id of a largest cluster
    std::uint64_t seed = 0;          ///< per-trial seed echo
};

ClusterStats largest_cluster(const ClusterLabeling& labeling);

/// Refines the volume of the largest component: vacant fraction of uniform
/// samples drawn inside the cluster's boxes, times the box-union volume.
double refine_largest_component_volume(const ClusterLabeling& labeling,
                                       const ClusterStats& stats,
                                       const SpatialIndex& idx, double R,
                                       std::int64_t n_samples, std::uint64_t seed,
                                       std::uint64_t trial_id);

/// Least-squares line on (n, ln P(#W(0) >= n)) over the usable range.
struct TailFit {
    std::vector<std::int64_t> n_values;
    std::vector<double> empirical_log_tail;
    double slope = 0.0;     ///< estimate of -C2
    double intercept = 0.0; ///< estimate of ln C1
    double r_squared = 0.0;
    std::int64_t trials = 0;
    bool valid = false;     ///< >= 4 usable points and slope < 0
    std::string reason;     ///< set when invalid
};

/// Survival-function fit from raw origin-cluster sizes; the core of
/// fit_cluster_tail, split out so synthetic tails can be injected.
TailFit fit_tail_from_sizes(std::span<const std::int64_t> sizes,
                            std::int64_t n_max, double min_survival_count = 5.0);

/// Samples `trials` independent configurations and fits the cluster-size
/// tail of the origin vertex. Subcritical vacancy is the intended regime;
/// out-of-regime data yields valid = false.
TailFit fit_cluster_tail(const ModelParams& params, std::int64_t trials,
                         std::int64_t n_max, std::uint64_t seed, int threads = 1);

/// Largest-cluster scaling against ln L at fixed (d, nu, R).
struct ScalingStudy {
    std::vector<double> L_values;
    std::vector<SampleSummary> A_stats; ///< per-L summary of A_N
    std::vector<double> q99;            ///< 99th percentile per L
    std::vector<double> qmax;           ///< max per L
    ScalingFit fit_q99;                 ///< q99 regressed on ln L
    double max_ratio_over_L = 0.0;      ///< max over L of (max A_N)/ln L
    double ratio_at_largest_L = 0.0;    ///< (max A_N)/ln L at the largest L
};

ScalingStudy scaling_study(const ModelParams& base, std::span<const double> L_list,
                           std::int64_t trials, std::uint64_t seed, int threads = 1);

/// True iff some vacant cluster joins the two opposite faces along axis 0.
bool has_spanning_cluster(const ClusterLabeling& labeling);

struct PercolationEstimate {
    std::vector<double> nu_grid;
    std::vector<double> L_values;
    /// spanning_probability[iL][inu]
    std::vector<std::vector<double>> spanning_probability;
    double nu_c_estimate = 0.0;
    double uncertainty = 0.0;
    bool crossed = false; ///< false when no crossing inside nu_grid
    std::vector<double> pair_estimates; ///< one per successive L pair
};

/// Crossing-point estimate of the critical intensity from spanning
/// probabilities at increasing L.
PercolationEstimate estimate_critical_intensity(int d, double R,
                                                std::span<const double> L_list,
                                                std::span<const double> nu_grid,
                                                std::int64_t trials,
                                                std::uint64_t seed,
                                                int threads = 1);

} // namespace povac
