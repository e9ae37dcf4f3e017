#include "povac/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "povac/parallel.hpp"

namespace povac {

namespace {

struct UnionFind {
    std::vector<std::int64_t> parent;

    explicit UnionFind(std::int64_t n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), std::int64_t{0});
    }

    std::int64_t find(std::int64_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]]; // path halving
            v = parent[v];
        }
        return v;
    }

    void unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // smaller index wins, which makes the final ids canonical
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

} // namespace

ClusterLabeling label_components(const OccupancyGrid& grid, bool moore_adjacency) {
    ClusterLabeling lab;
    lab.d = grid.d;
    lab.spacing = grid.spacing;
    lab.jmin = grid.jmin;
    lab.jmax = grid.jmax;
    lab.shape = grid.shape;
    lab.strides = grid.strides;

    const std::int64_t n = grid.n_boxes();
    UnionFind uf(n);

    // Neighbor offsets with positive linear displacement only: each edge is
    // visited once, from its lower endpoint.
    std::vector<std::int64_t> offsets;
    if (!moore_adjacency) {
        for (int a = 0; a < grid.d; ++a) offsets.push_back(grid.strides[a]);
    } else {
        std::vector<std::int64_t> delta(grid.d, -1);
        while (true) {
            std::int64_t lin = 0;
            bool nonzero = false;
            for (int a = 0; a < grid.d; ++a) {
                lin += delta[a] * grid.strides[a];
                if (delta[a] != 0) nonzero = true;
            }
            if (nonzero && lin > 0) offsets.push_back(lin);
            int a = grid.d - 1;
            while (a >= 0 && delta[a] == 1) delta[a--] = -1;
            if (a < 0) break;
            ++delta[a];
        }
        std::sort(offsets.begin(), offsets.end());
    }

    std::vector<std::int64_t> j(grid.d);
    for (std::int64_t lin = 0; lin < n; ++lin) {
        if (grid.occupied[static_cast<std::size_t>(lin)]) continue;
        // decode multi-index incrementally is not worth it at desk scale
        std::int64_t rest = lin;
        for (int a = 0; a < grid.d; ++a) {
            j[a] = rest / grid.strides[a];
            rest %= grid.strides[a];
        }
        if (!moore_adjacency) {
            for (int a = 0; a < grid.d; ++a) {
                if (j[a] + 1 >= grid.shape[a]) continue;
                const std::int64_t nb = lin + grid.strides[a];
                if (!grid.occupied[static_cast<std::size_t>(nb)]) uf.unite(lin, nb);
            }
        } else {
            // Moore mode: enumerate all forward diagonal neighbors; bounds
            // are checked per axis from the decoded index.
            std::vector<std::int64_t> delta(grid.d, -1);
            while (true) {
                std::int64_t lin_off = 0;
                bool nonzero = false, in_bounds = true;
                for (int a = 0; a < grid.d; ++a) {
                    lin_off += delta[a] * grid.strides[a];
                    if (delta[a] != 0) nonzero = true;
                    const std::int64_t ja = j[a] + delta[a];
                    if (ja < 0 || ja >= grid.shape[a]) in_bounds = false;
                }
                if (nonzero && lin_off > 0 && in_bounds) {
                    const std::int64_t nb = lin + lin_off;
                    if (!grid.occupied[static_cast<std::size_t>(nb)])
                        uf.unite(lin, nb);
                }
                int a = grid.d - 1;
                while (a >= 0 && delta[a] == 1) delta[a--] = -1;
                if (a < 0) break;
                ++delta[a];
            }
        }
    }

    lab.root.assign(static_cast<std::size_t>(n), -1);
    std::map<std::int64_t, std::int64_t> sizes;
    for (std::int64_t lin = 0; lin < n; ++lin) {
        if (grid.occupied[static_cast<std::size_t>(lin)]) continue;
        const std::int64_t r = uf.find(lin);
        lab.root[static_cast<std::size_t>(lin)] = r;
        ++sizes[r];
        ++lab.n_vacant;
    }
    lab.cluster_sizes.assign(sizes.begin(), sizes.end());
    lab.n_clusters = static_cast<std::int64_t>(lab.cluster_sizes.size());
    return lab;
}

std::int64_t cluster_size_at(const ClusterLabeling& labeling,
                             std::span<const std::int64_t> vertex) {
    if (!labeling.in_extent(vertex))
        throw std::out_of_range("cluster_size_at: vertex outside grid extent");
    const std::int64_t lin = labeling.linear_index(vertex);
    const std::int64_t id = labeling.root[static_cast<std::size_t>(lin)];
    if (id < 0) return 0;
    auto it = std::lower_bound(labeling.cluster_sizes.begin(),
                               labeling.cluster_sizes.end(),
                               std::make_pair(id, std::int64_t{0}));
    return it->second;
}

ClusterStats largest_cluster(const ClusterLabeling& labeling) {
    ClusterStats stats;
    stats.volume_mc = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [id, size] : labeling.cluster_sizes) {
        if (size > stats.A_N) {
            stats.A_N = size;
            stats.largest_id = id;
        }
    }
    stats.volume_upper =
        static_cast<double>(stats.A_N) * std::pow(labeling.spacing, labeling.d);
    return stats;
}

double refine_largest_component_volume(const ClusterLabeling& labeling,
                                       const ClusterStats& stats,
                                       const SpatialIndex& idx, double R,
                                       std::int64_t n_samples, std::uint64_t seed,
                                       std::uint64_t trial_id) {
    if (stats.A_N == 0 || n_samples < 1) return 0.0;

    std::vector<std::int64_t> boxes;
    for (std::int64_t lin = 0; lin < static_cast<std::int64_t>(labeling.root.size()); ++lin)
        if (labeling.root[static_cast<std::size_t>(lin)] == stats.largest_id)
            boxes.push_back(lin);

    TrialRng rng(seed, trial_id, rng_stream::volume_mc);
    const double s = labeling.spacing;
    std::vector<double> x(labeling.d);
    std::int64_t vacant = 0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const auto pick = static_cast<std::size_t>(
            rng.next_u64() % boxes.size());
        std::int64_t rest = boxes[pick];
        for (int a = 0; a < labeling.d; ++a) {
            const std::int64_t ja = labeling.jmin[a] + rest / labeling.strides[a];
            rest %= labeling.strides[a];
            x[a] = (static_cast<double>(ja) - 0.5 + rng.next_double()) * s;
        }
        if (is_vacant_point(idx, x, R)) ++vacant;
    }
    return stats.volume_upper * static_cast<double>(vacant) /
           static_cast<double>(n_samples);
}

TailFit fit_tail_from_sizes(std::span<const std::int64_t> sizes,
                            std::int64_t n_max, double min_survival_count) {
    TailFit fit;
    fit.trials = static_cast<std::int64_t>(sizes.size());
    if (fit.trials < 1) {
        fit.reason = "no trials";
        return fit;
    }

    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::int64_t count = 0;
        for (std::int64_t s : sizes)
            if (s >= n) ++count;
        if (static_cast<double>(count) <= min_survival_count) break;
        fit.n_values.push_back(n);
        fit.empirical_log_tail.push_back(
            std::log(static_cast<double>(count) / static_cast<double>(fit.trials)));
    }

    if (fit.n_values.size() < 4) {
        fit.reason = "fewer than 4 usable tail points";
        return fit;
    }

    std::vector<double> xs(fit.n_values.begin(), fit.n_values.end());
    const ScalingFit line = fit_linear(xs, fit.empirical_log_tail);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    if (!(fit.slope < 0.0)) {
        fit.reason = "non-negative tail slope; vacancy not subcritical";
        return fit;
    }
    fit.valid = true;
    return fit;
}

TailFit fit_cluster_tail(const ModelParams& params, std::int64_t trials,
                         std::int64_t n_max, std::uint64_t seed, int threads) {
    if (trials < 1) throw std::invalid_argument("fit_cluster_tail: trials must be >= 1");

    std::vector<std::int64_t> sizes(static_cast<std::size_t>(trials), 0);
    const std::vector<std::int64_t> origin(static_cast<std::size_t>(params.d), 0);
    parallel_for_index(trials, threads, [&](std::int64_t t) {
        const PointSet ps = sample_poisson(params, seed, static_cast<std::uint64_t>(t));
        const OccupancyGrid grid = discretize(ps, params);
        const ClusterLabeling lab = label_components(grid);
        sizes[static_cast<std::size_t>(t)] = cluster_size_at(lab, origin);
    });
    return fit_tail_from_sizes(sizes, n_max);
}

ScalingStudy scaling_study(const ModelParams& base, std::span<const double> L_list,
                           std::int64_t trials, std::uint64_t seed, int threads) {
    if (L_list.empty()) throw std::invalid_argument("scaling_study: empty L list");
    if (trials < 1) throw std::invalid_argument("scaling_study: trials must be >= 1");

    ScalingStudy study;
    study.L_values.assign(L_list.begin(), L_list.end());

    std::vector<double> log_L;
    for (std::size_t iL = 0; iL < L_list.size(); ++iL) {
        const double L = L_list[iL];
        const auto N = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::llround(base.rho * std::pow(L, base.d))));
        const ModelParams params = ModelParams::from_box(base.d, base.nu, base.R, L, N);

        std::vector<double> A(static_cast<std::size_t>(trials), 0.0);
        parallel_for_index(trials, threads, [&](std::int64_t t) {
            const std::uint64_t trial_id =
                static_cast<std::uint64_t>(iL) * static_cast<std::uint64_t>(trials) +
                static_cast<std::uint64_t>(t);
            const PointSet ps = sample_poisson(params, seed, trial_id);
            const OccupancyGrid grid = discretize(ps, params);
            const ClusterLabeling lab = label_components(grid);
            A[static_cast<std::size_t>(t)] =
                static_cast<double>(largest_cluster(lab).A_N);
        });

        study.A_stats.push_back(summarize(A));
        study.q99.push_back(percentile_nearest_rank(A, 99.0));
        study.qmax.push_back(study.A_stats.back().p100);
        log_L.push_back(std::log(L));
    }

    study.fit_q99 = fit_linear(log_L, study.q99);
    double max_ratio = 0.0;
    for (std::size_t iL = 0; iL < L_list.size(); ++iL)
        max_ratio = std::max(max_ratio, study.qmax[iL] / log_L[iL]);
    study.max_ratio_over_L = max_ratio;
    study.ratio_at_largest_L = study.qmax.back() / log_L.back();
    return study;
}

bool has_spanning_cluster(const ClusterLabeling& labeling) {
    if (labeling.n_vacant == 0) return false;

    // Collect cluster ids present on the two opposite faces along axis 0.
    const std::int64_t face_stride = labeling.strides[0];
    const std::int64_t face_size = face_stride; // product of the other axes
    const std::int64_t last_off = (labeling.shape[0] - 1) * face_stride;

    std::vector<std::int64_t> left;
    for (std::int64_t i = 0; i < face_size; ++i) {
        const std::int64_t id = labeling.root[static_cast<std::size_t>(i)];
        if (id >= 0) left.push_back(id);
    }
    if (left.empty()) return false;
    std::sort(left.begin(), left.end());
    left.erase(std::unique(left.begin(), left.end()), left.end());

    for (std::int64_t i = 0; i < face_size; ++i) {
        const std::int64_t id =
            labeling.root[static_cast<std::size_t>(last_off + i)];
        if (id >= 0 && std::binary_search(left.begin(), left.end(), id))
            return true;
    }
    return false;
}

PercolationEstimate estimate_critical_intensity(int d, double R,
                                                std::span<const double> L_list,
                                                std::span<const double> nu_grid,
                                                std::int64_t trials,
                                                std::uint64_t seed, int threads) {
    if (L_list.size() < 2)
        throw std::invalid_argument("estimate_critical_intensity: need >= 2 L values");
    if (nu_grid.size() < 2)
        throw std::invalid_argument("estimate_critical_intensity: need >= 2 intensities");

    PercolationEstimate est;
    est.L_values.assign(L_list.begin(), L_list.end());
    est.nu_grid.assign(nu_grid.begin(), nu_grid.end());
    est.spanning_probability.assign(L_list.size(),
                                    std::vector<double>(nu_grid.size(), 0.0));

    const std::int64_t n_cells =
        static_cast<std::int64_t>(L_list.size() * nu_grid.size());
    std::vector<std::int64_t> spanning_counts(
        static_cast<std::size_t>(n_cells * trials), 0);

    parallel_for_index(n_cells * trials, threads, [&](std::int64_t task) {
        const std::int64_t cell = task / trials;
        const std::int64_t t = task % trials;
        const auto iL = static_cast<std::size_t>(cell / static_cast<std::int64_t>(nu_grid.size()));
        const auto inu = static_cast<std::size_t>(cell % static_cast<std::int64_t>(nu_grid.size()));
        const double L = L_list[iL];
        const auto N = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::llround(std::pow(L, d))));
        const ModelParams params =
            ModelParams::from_box(d, nu_grid[inu], R, L, N);
        const PointSet ps =
            sample_poisson(params, seed, static_cast<std::uint64_t>(task));
        const OccupancyGrid grid = discretize(ps, params);
        const ClusterLabeling lab = label_components(grid);
        spanning_counts[static_cast<std::size_t>(task)] =
            has_spanning_cluster(lab) ? 1 : 0;
    });

    for (std::size_t iL = 0; iL < L_list.size(); ++iL) {
        for (std::size_t inu = 0; inu < nu_grid.size(); ++inu) {
            const std::int64_t cell =
                static_cast<std::int64_t>(iL * nu_grid.size() + inu);
            std::int64_t hits = 0;
            for (std::int64_t t = 0; t < trials; ++t)
                hits += spanning_counts[static_cast<std::size_t>(cell * trials + t)];
            est.spanning_probability[iL][inu] =
                static_cast<double>(hits) / static_cast<double>(trials);
        }
    }

    // Crossing of successive-L curves: D(nu) = P_larger - P_smaller changes
    // sign from + to - at the finite-size pseudo-critical point.
    for (std::size_t iL = 0; iL + 1 < L_list.size(); ++iL) {
        const auto& p_small = est.spanning_probability[iL];
        const auto& p_large = est.spanning_probability[iL + 1];
        for (std::size_t k = 0; k + 1 < nu_grid.size(); ++k) {
            const double d0 = p_large[k] - p_small[k];
            const double d1 = p_large[k + 1] - p_small[k + 1];
            if (d0 >= 0.0 && d1 < 0.0) {
                const double span = nu_grid[k + 1] - nu_grid[k];
                const double frac = (d0 - d1) > 0.0 ? d0 / (d0 - d1) : 0.5;
                est.pair_estimates.push_back(nu_grid[k] + frac * span);
                break;
            }
        }
    }

    if (!est.pair_estimates.empty()) {
        est.crossed = true;
        double sum = 0.0;
        for (double v : est.pair_estimates) sum += v;
        est.nu_c_estimate = sum / static_cast<double>(est.pair_estimates.size());
        double spread = 0.0;
        for (double v : est.pair_estimates)
            spread = std::max(spread, std::abs(v - est.nu_c_estimate));
        double grid_step = 0.0;
        for (std::size_t k = 0; k + 1 < nu_grid.size(); ++k)
            grid_step = std::max(grid_step, nu_grid[k + 1] - nu_grid[k]);
        est.uncertainty = std::max(spread, 0.5 * grid_step);
    }
    return est;
}

} // namespace povac
