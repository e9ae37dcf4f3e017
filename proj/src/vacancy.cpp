#include "povac/vacancy.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "povac/io.hpp"

namespace povac {

std::vector<std::int64_t> OccupancyGrid::box_of_point(std::span<const double> x) const {
    std::vector<std::int64_t> j(d);
    for (int a = 0; a < d; ++a)
        j[a] = static_cast<std::int64_t>(std::floor(x[a] / spacing + 0.5));
    return j;
}

Box OccupancyGrid::box_bounds(std::span<const std::int64_t> j) const {
    Box b;
    b.lo.resize(d);
    b.hi.resize(d);
    for (int a = 0; a < d; ++a) {
        b.lo[a] = j[a] * spacing - 0.5 * spacing;
        b.hi[a] = j[a] * spacing + 0.5 * spacing;
    }
    return b;
}

OccupancyGrid discretize(const PointSet& ps, const ModelParams& params,
                         double spacing) {
    if (spacing < 0.0)
        throw std::invalid_argument("discretize: spacing must be > 0");
    const double s = spacing == 0.0 ? params.lattice_spacing() : spacing;
    if (!(s > 0.0)) throw std::invalid_argument("discretize: spacing must be > 0");

    OccupancyGrid g;
    g.d = params.d;
    g.spacing = s;
    g.L = params.L;
    g.origin_offset.assign(params.d, 0.0);

    // Box closure [js - s/2, js + s/2] intersects the open cube
    // (-L/2, L/2)^d iff |j| < (L + s) / (2s) on every axis.
    const double t = (params.L + s) / (2.0 * s);
    const std::int64_t jmax = static_cast<std::int64_t>(std::ceil(t)) - 1;
    g.jmin.assign(params.d, -jmax);
    g.jmax.assign(params.d, jmax);
    g.shape.assign(params.d, 2 * jmax + 1);
    g.strides.assign(params.d, 1);
    for (int a = params.d - 2; a >= 0; --a)
        g.strides[a] = g.strides[a + 1] * g.shape[a + 1];
    const std::int64_t total = g.strides[0] * g.shape[0];
    g.occupied.assign(static_cast<std::size_t>(total), 0);

    std::vector<std::int64_t> j(params.d);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto p = ps.point(i);
        bool inside = true;
        for (int a = 0; a < params.d; ++a) {
            j[a] = static_cast<std::int64_t>(std::floor(p[a] / s + 0.5));
            if (j[a] < g.jmin[a] || j[a] > g.jmax[a]) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        auto& cell = g.occupied[static_cast<std::size_t>(g.linear_index(j))];
        if (!cell) {
            cell = 1;
            ++g.n_occupied;
        }
    }
    return g;
}

VacancyEstimate estimate_vacancy_fraction(const SpatialIndex& idx,
                                          const ModelParams& params,
                                          std::int64_t n_samples,
                                          std::uint64_t seed,
                                          std::uint64_t trial_id) {
    if (n_samples < 1)
        throw std::invalid_argument("estimate_vacancy_fraction: n_samples must be >= 1");

    TrialRng rng(seed, trial_id, rng_stream::vacancy_samples);
    std::vector<double> x(params.d);
    std::int64_t vacant = 0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        for (int a = 0; a < params.d; ++a)
            x[a] = params.L * (rng.next_double() - 0.5);
        if (is_vacant_point(idx, x, params.R)) ++vacant;
    }

    VacancyEstimate est;
    est.n_samples = n_samples;
    est.fraction = static_cast<double>(vacant) / static_cast<double>(n_samples);
    est.stderr_ = std::sqrt(est.fraction * (1.0 - est.fraction) /
                            static_cast<double>(n_samples));
    return est;
}

bool is_admissible_configuration(std::span<const double> flat_points, int d,
                                 double a, const SpatialIndex& idx, double R) {
    const std::size_t n = flat_points.size() / static_cast<std::size_t>(d);
    if (n == 0) throw std::invalid_argument("is_admissible_configuration: N must be >= 1");

    auto pt = [&](std::size_t i) {
        return std::span<const double>(flat_points.data() + i * d,
                                       static_cast<std::size_t>(d));
    };

    for (std::size_t i = 0; i < n; ++i)
        if (!is_vacant_point(idx, pt(i), R)) return false;

    // Pairwise separation via a cell grid of side a over the configuration
    // itself; the naive O(N^2) check is the test oracle.
    PointSet tmp;
    tmp.d = d;
    tmp.coords.assign(flat_points.begin(), flat_points.end());
    const SpatialIndex self(tmp, a);
    for (std::size_t i = 0; i < n; ++i) {
        const bool separated = self.for_each_within(
            pt(i), a, [&](std::uint32_t other) { return other == i; });
        if (!separated) return false;
    }
    return true;
}

void write_grid_rle(std::ostream& out, const OccupancyGrid& grid) {
    out << grid.d << ' ' << format_double(grid.spacing);
    for (int a = 0; a < grid.d; ++a)
        out << ' ' << grid.jmin[a] << ' ' << grid.jmax[a];
    out << '\n';
    // Alternating run lengths, first run counts vacant (0) entries.
    std::uint8_t current = 0;
    std::int64_t run = 0;
    bool first = true;
    for (std::uint8_t bit : grid.occupied) {
        if (bit == current) {
            ++run;
        } else {
            out << (first ? "" : " ") << run;
            first = false;
            current = bit;
            run = 1;
        }
    }
    out << (first ? "" : " ") << run << '\n';
}

} // namespace povac
