#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "povac/params.hpp"
#include "povac/point_set.hpp"
#include "povac/spatial_index.hpp"

namespace povac {

/// A point is vacant iff it is not covered by any closed obstacle ball:
/// nearest_distance(x) > R. Points exactly at distance R are covered.
inline bool is_vacant_point(const SpatialIndex& idx, std::span<const double> x,
                            double R) {
    return !idx.has_point_within(x, R);
}

/// Lattice discretization with boxes [j*s - s/2, j*s + s/2) per axis,
/// anchored at the origin. A box is occupied iff it contains at least one
/// Poisson point of the padded configuration. With s = R/sqrt(d) the box
/// diagonal equals R, so an occupied box is fully covered by the closed
/// R-ball around any of its points.
struct OccupancyGrid {
    int d = 0;
    double spacing = 0.0;              ///< s
    double L = 0.0;                    ///< side of the particle box
    std::vector<double> origin_offset; ///< center of box index (0,...,0)
    std::vector<std::int64_t> jmin;    ///< inclusive index range per axis
    std::vector<std::int64_t> jmax;
    std::vector<std::int64_t> shape;   ///< jmax - jmin + 1
    std::vector<std::int64_t> strides; ///< last axis fastest
    std::vector<std::uint8_t> occupied;
    std::int64_t n_occupied = 0;

    std::int64_t n_boxes() const {
        return static_cast<std::int64_t>(occupied.size());
    }
    std::int64_t n_vacant() const { return n_boxes() - n_occupied; }

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

    std::vector<std::int64_t> multi_index(std::int64_t linear) const {
        std::vector<std::int64_t> j(d);
        for (int a = 0; a < d; ++a) {
            j[a] = jmin[a] + linear / strides[a];
            linear %= strides[a];
        }
        return j;
    }

    /// Box index containing x: floor(x/s + 1/2) per axis.
    std::vector<std::int64_t> box_of_point(std::span<const double> x) const;

    /// [lo, hi) bounds of box j.
    Box box_bounds(std::span<const std::int64_t> j) const;

    bool is_vacant_box(std::span<const std::int64_t> j) const {
        return occupied[static_cast<std::size_t>(linear_index(j))] == 0;
    }
};

/// Builds the occupancy grid over every box whose closure intersects the
/// open particle box. spacing <= 0 selects the default R/sqrt(d).
OccupancyGrid discretize(const PointSet& ps, const ModelParams& params,
                         double spacing = 0.0);

struct VacancyEstimate {
    double fraction = 0.0; ///< share of uniform samples that are vacant
    double stderr_ = 0.0;  ///< binomial standard error
    std::int64_t n_samples = 0;
};

/// Uniform Monte Carlo estimate of |vacancy set| / |box|.
VacancyEstimate estimate_vacancy_fraction(const SpatialIndex& idx,
                                          const ModelParams& params,
                                          std::int64_t n_samples,
                                          std::uint64_t seed,
                                          std::uint64_t trial_id = 0);

/// True iff every configuration point is vacant and all pairwise distances
/// strictly exceed the hardcore radius a.
bool is_admissible_configuration(std::span<const double> flat_points, int d,
                                 double a, const SpatialIndex& idx, double R);

/// Debug export: header "d s jmin_1 jmax_1 ... jmin_d jmax_d", then
/// run-length encoded occupancy in linear order (last axis fastest),
/// alternating run lengths starting with vacant runs.
void write_grid_rle(std::ostream& out, const OccupancyGrid& grid);

} // namespace povac
