#include "povac/point_set.hpp"

#include <ostream>
#include <stdexcept>

#include "povac/io.hpp"

namespace povac {

PointSet sample_poisson(const ModelParams& params, std::uint64_t seed,
                        std::uint64_t trial_id) {
    params.validate();

    PointSet ps;
    ps.d = params.d;
    ps.sample_box = params.sample_box();
    ps.nu = params.nu;
    ps.seed = seed;
    ps.trial_id = trial_id;

    TrialRng rng(seed, trial_id, rng_stream::points);
    const double mean = params.nu * ps.sample_box.volume();
    const std::uint64_t n = rng.poisson(mean);

    ps.coords.resize(n * static_cast<std::size_t>(params.d));
    for (std::uint64_t i = 0; i < n; ++i) {
        rng.point_in_box(ps.sample_box.lo, ps.sample_box.hi,
                         {ps.coords.data() + i * params.d,
                          static_cast<std::size_t>(params.d)});
    }
    return ps;
}

PointSet thin_points(const PointSet& ps, double keep_fraction) {
    if (!(keep_fraction >= 0.0 && keep_fraction <= 1.0))
        throw std::invalid_argument("thin_points: keep_fraction must be in [0, 1]");

    TrialRng rng(ps.seed, ps.trial_id, rng_stream::thinning);
    PointSet out;
    out.d = ps.d;
    out.sample_box = ps.sample_box;
    out.nu = ps.nu * keep_fraction;
    out.seed = ps.seed;
    out.trial_id = ps.trial_id;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double u = rng.next_double();
        if (u < keep_fraction) {
            auto p = ps.point(i);
            out.coords.insert(out.coords.end(), p.begin(), p.end());
        }
    }
    return out;
}

void write_points(std::ostream& out, const PointSet& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        auto p = ps.point(i);
        for (int k = 0; k < ps.d; ++k) {
            if (k) out << ' ';
            out << format_double(p[k]);
        }
        out << '\n';
    }
}

} // namespace povac
