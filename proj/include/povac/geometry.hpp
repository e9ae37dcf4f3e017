#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace povac {

/// Volume of the unit ball in d dimensions: pi^{d/2} / Gamma(d/2 + 1).
inline double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("unit_ball_volume: dimension must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

inline double sq_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double dx = a[i] - b[i];
        s += dx * dx;
    }
    return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(sq_distance(a, b));
}

/// Axis-aligned box [lo_i, hi_i) per axis.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }

    double volume() const {
        double v = 1.0;
        for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
        return v;
    }

    bool contains(std::span<const double> x) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (x[i] < lo[i] || x[i] >= hi[i]) return false;
        return true;
    }

    static Box centered_cube(int d, double side) {
        Box b;
        b.lo.assign(static_cast<std::size_t>(d), -0.5 * side);
        b.hi.assign(static_cast<std::size_t>(d), 0.5 * side);
        return b;
    }
};

} // namespace povac
