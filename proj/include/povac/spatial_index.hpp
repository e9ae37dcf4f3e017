#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "povac/point_set.hpp"

namespace povac {

/// Uniform-grid neighbor index over a PointSet. Buckets map the integer
/// cell coordinate floor(x_i / cell_size) to point indices. Queries are
/// exact; the grid only prunes candidates. Immutable after construction.
class SpatialIndex {
public:
    /// cell_size defaults to the obstacle radius when 0 is passed by
    /// callers that have a ModelParams at hand; here it must be > 0.
    SpatialIndex(const PointSet& ps, double cell_size);

    int dim() const { return d_; }
    double cell_size() const { return cell_; }
    std::size_t n_points() const { return coords_.size() / std::max(1, d_); }
    std::size_t n_buckets() const { return buckets_.size(); }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(d_),
                static_cast<std::size_t>(d_)};
    }

    /// Exact Euclidean distance to the nearest point, +infinity when empty.
    double nearest_distance(std::span<const double> x) const;

    /// True iff some point p satisfies |p - x| <= r (closed ball).
    bool has_point_within(std::span<const double> x, double r) const;

    /// Calls fn(i) for every point index with |p_i - x| <= r. fn returns
    /// false to stop early; the method returns false iff stopped.
    bool for_each_within(std::span<const double> x, double r,
                         const std::function<bool(std::uint32_t)>& fn) const;

private:
    static constexpr int kMaxDim = 8;
    using CellKey = std::array<std::int32_t, kMaxDim>;

    struct CellKeyHash {
        std::size_t operator()(const CellKey& k) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::int32_t c : k) {
                h ^= static_cast<std::uint32_t>(c);
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };

    CellKey cell_of(std::span<const double> x) const;
    const std::vector<std::uint32_t>* bucket(const CellKey& k) const {
        auto it = buckets_.find(k);
        return it == buckets_.end() ? nullptr : &it->second;
    }

    int d_ = 0;
    double cell_ = 1.0;
    std::vector<double> coords_;
    std::unordered_map<CellKey, std::vector<std::uint32_t>, CellKeyHash> buckets_;
    CellKey cell_min_{};
    CellKey cell_max_{};
};

/// Convenience builder matching the spec default cell_size = R.
SpatialIndex build_spatial_index(const PointSet& ps, double cell_size);

} // namespace povac
