#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "povac/cluster.hpp"
#include "povac/geometry.hpp"

namespace povac {

/// A one-particle function sampled at the centers of a regular grid over
/// its support box, extended by zero outside.
struct ScalarField {
    int d = 0;
    double grid_step = 0.0;
    std::vector<double> origin; ///< lower corner of the support box
    std::vector<std::int64_t> shape, strides;
    std::vector<double> values;
    bool normalized_flag = false;

    /// grid_step^d * sum of squared values.
    double mass() const;

    Box support_box() const;

    /// Center coordinate of grid cell `idx`.
    std::vector<double> cell_center(std::span<const std::int64_t> idx) const;

    /// Divides by the current L2 norm; flags the field normalized.
    void normalize();
};

/// Partition of space into boxes [offset + n r, offset + (n+1) r) per axis.
/// Paper mode requires r <= a / sqrt(d) so a cell holds at most one
/// hardcore particle.
struct PartitionSpec {
    double cell_side = 0.0;
    std::vector<double> offset;
};

/// (1/L^d) (sum_n sqrt(m_n))^2 where m_n is the phi^2 mass in cell n.
/// Rejects fields whose mass deviates from 1 by more than 1e-6 relative.
double partition_occupation_bound(const ScalarField& phi,
                                  const PartitionSpec& part, double L);

/// Number of partition cells carrying positive phi^2 mass.
std::int64_t support_cell_count(const ScalarField& phi, const PartitionSpec& part);

/// phi constant on the largest vacant cluster's boxes, zero elsewhere,
/// sampled at spacing s / refine. Normalization is exact by construction.
ScalarField uniform_component_field(const ClusterLabeling& labeling,
                                    const ClusterStats& stats, int refine);

/// A single normalized radial bump of support radius 1/2 at `center`,
/// sampled at step (1/2) / refine.
ScalarField single_bump_field(std::span<const double> center, int refine);

} // namespace povac
