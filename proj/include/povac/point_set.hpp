#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "povac/geometry.hpp"
#include "povac/params.hpp"
#include "povac/rng.hpp"

namespace povac {

/// One sampled Poisson configuration on the padded box. Immutable after
/// construction and safe to share across threads.
struct PointSet {
    int d = 0;
    std::vector<double> coords; ///< flat row-major, size() * d entries
    Box sample_box;
    double nu = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trial_id = 0;

    std::size_t size() const {
        return d == 0 ? 0 : coords.size() / static_cast<std::size_t>(d);
    }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(d),
                static_cast<std::size_t>(d)};
    }

    /// The only way to obtain a configuration with nu = 0.
    static PointSet empty(const Box& box) {
        PointSet ps;
        ps.d = box.dim();
        ps.sample_box = box;
        return ps;
    }
};

/// Sample a homogeneous Poisson process of intensity params.nu on the
/// R-padded box. Deterministic under fixed (seed, trial_id): the count is
/// drawn first, then coordinates in order.
PointSet sample_poisson(const ModelParams& params, std::uint64_t seed,
                        std::uint64_t trial_id);

/// Independent thinning: keeps point i iff its coupling uniform u_i is
/// below keep_fraction. The uniforms depend on (seed, trial_id) only, so
/// thinned sets are nested across keep fractions — the coupling used by
/// the monotonicity tests.
PointSet thin_points(const PointSet& ps, double keep_fraction);

/// Debug dump: one point per line, d whitespace-separated coordinates.
void write_points(std::ostream& out, const PointSet& ps);

} // namespace povac
