#include "povac/spatial_index.hpp"

#include <cmath>
#include <stdexcept>

namespace povac {

SpatialIndex::SpatialIndex(const PointSet& ps, double cell_size)
    : d_(ps.d), cell_(cell_size), coords_(ps.coords) {
    if (!(cell_size > 0.0))
        throw std::invalid_argument("SpatialIndex: cell_size must be > 0");
    if (d_ < 1 || d_ > kMaxDim)
        throw std::invalid_argument("SpatialIndex: unsupported dimension");

    cell_min_.fill(std::numeric_limits<std::int32_t>::max());
    cell_max_.fill(std::numeric_limits<std::int32_t>::min());
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i) {
        const CellKey k = cell_of(ps.point(i));
        buckets_[k].push_back(static_cast<std::uint32_t>(i));
        for (int a = 0; a < d_; ++a) {
            cell_min_[a] = std::min(cell_min_[a], k[a]);
            cell_max_[a] = std::max(cell_max_[a], k[a]);
        }
    }
}

SpatialIndex build_spatial_index(const PointSet& ps, double cell_size) {
    return SpatialIndex(ps, cell_size);
}

SpatialIndex::CellKey SpatialIndex::cell_of(std::span<const double> x) const {
    CellKey k{};
    for (int a = 0; a < d_; ++a)
        k[a] = static_cast<std::int32_t>(std::floor(x[a] / cell_));
    return k;
}

namespace {

/// Visits every offset o in [-k, k]^d with max_i |o_i| == k exactly once.
/// `visit` returns false to abort the walk.
template <typename Fn>
bool walk_ring(int d, int k, std::array<std::int32_t, 8>& offset, int axis,
               bool pinned, Fn&& visit) {
    if (axis == d) return pinned ? visit(offset) : true;
    if (axis == d - 1 && !pinned) {
        for (std::int32_t v : {-k, k}) {
            offset[axis] = v;
            if (!visit(offset)) return false;
            if (k == 0) break;
        }
        return true;
    }
    for (std::int32_t v = -k; v <= k; ++v) {
        offset[axis] = v;
        if (!walk_ring(d, k, offset, axis + 1, pinned || std::abs(v) == k, visit))
            return false;
    }
    return true;
}

} // namespace

double SpatialIndex::nearest_distance(std::span<const double> x) const {
    if (buckets_.empty()) return std::numeric_limits<double>::infinity();

    const CellKey base = cell_of(x);
    // No bucket lies outside the bounding cell range; past it the walk stops.
    int max_ring = 0;
    for (int a = 0; a < d_; ++a) {
        max_ring = std::max(max_ring, std::abs(base[a] - cell_min_[a]));
        max_ring = std::max(max_ring, std::abs(base[a] - cell_max_[a]));
    }

    double best2 = std::numeric_limits<double>::infinity();
    std::array<std::int32_t, 8> offset{};
    for (int k = 0; k <= max_ring; ++k) {
        if (k > 0) {
            // Every cell in ring k is at distance > (k - 1) * cell_ from x.
            const double bound = (k - 1) * cell_;
            if (best2 <= bound * bound) break;
        }
        walk_ring(d_, k, offset, 0, false, [&](const std::array<std::int32_t, 8>& o) {
            CellKey key{};
            for (int a = 0; a < d_; ++a) key[a] = base[a] + o[a];
            if (const auto* b = bucket(key)) {
                for (std::uint32_t idx : *b) {
                    const double d2 = sq_distance(x, point(idx));
                    if (d2 < best2) best2 = d2;
                }
            }
            return true;
        });
    }
    return std::sqrt(best2);
}

bool SpatialIndex::has_point_within(std::span<const double> x, double r) const {
    return !for_each_within(x, r, [](std::uint32_t) { return false; });
}

bool SpatialIndex::for_each_within(std::span<const double> x, double r,
                                   const std::function<bool(std::uint32_t)>& fn) const {
    if (buckets_.empty() || !(r >= 0.0)) return true;

    const double r2 = r * r;
    CellKey lo{}, hi{};
    for (int a = 0; a < d_; ++a) {
        lo[a] = std::max(cell_min_[a],
                         static_cast<std::int32_t>(std::floor((x[a] - r) / cell_)));
        hi[a] = std::min(cell_max_[a],
                         static_cast<std::int32_t>(std::floor((x[a] + r) / cell_)));
        if (lo[a] > hi[a]) return true;
    }

    CellKey key = lo;
    while (true) {
        if (const auto* b = bucket(key)) {
            for (std::uint32_t idx : *b) {
                if (sq_distance(x, point(idx)) <= r2) {
                    if (!fn(idx)) return false;
                }
            }
        }
        int a = d_ - 1;
        while (a >= 0) {
            if (++key[a] <= hi[a]) break;
            key[a] = lo[a];
            --a;
        }
        if (a < 0) return true;
    }
}

} // namespace povac
