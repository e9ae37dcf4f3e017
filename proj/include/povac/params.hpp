#pragma once

#include <cmath>
#include <cstdint>

#include "povac/geometry.hpp"

namespace povac {

/// Model parameters: obstacle balls of radius R are dropped at Poisson
/// points of intensity nu inside the padded simulation box; N particles
/// at density rho = N / L^d live in the open cube (-L/2, L/2)^d.
struct ModelParams {
    int d = 2;           ///< spatial dimension, >= 2
    double nu = 1.0;     ///< Poisson intensity per unit volume
    double R = 1.0;      ///< obstacle radius
    double L = 1.0;      ///< box side length
    std::int64_t N = 1;  ///< particle count
    double rho = 1.0;    ///< N / L^d
    double omega_d = 0;  ///< unit-ball volume in d dimensions

    /// N is authoritative: rho is derived exactly as N / L^d.
    static ModelParams from_box(int d, double nu, double R, double L, std::int64_t N);

    /// L derived as (N / rho)^{1/d}; rho is then re-derived from the
    /// floating-point L so the invariant rho = N / L^d holds exactly.
    static ModelParams from_density(int d, double nu, double R, double rho, std::int64_t N);

    /// The open particle box (-L/2, L/2)^d.
    Box domain() const { return Box::centered_cube(d, L); }

    /// The sampling box, padded by R on every side: obstacles centered
    /// outside the domain but within R of it still cover part of it.
    Box sample_box() const { return Box::centered_cube(d, L + 2.0 * R); }

    /// Lattice spacing s = R / sqrt(d) of the occupancy discretization.
    double lattice_spacing() const { return R / std::sqrt(static_cast<double>(d)); }

    void validate() const;
};

} // namespace povac
