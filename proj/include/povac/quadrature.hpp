#pragma once

#include <functional>
#include <span>
#include <vector>

namespace povac {

/// Adaptive Simpson on [a, b] with absolute tolerance tol.
double integrate_adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tol,
                                  int max_depth = 40);

struct PairIntegralResult {
    double value = 0.0;
    double rel_change = 0.0; ///< last Richardson-extrapolated relative change
    bool converged = false;
};

/// Double integral over two copies of the cube [-h, h]^d:
///
///   I = int int w(|x - y - shift|) g(|x|)^2 g(|y|)^2 dx dy
///
/// via the tensor midpoint rule with Richardson extrapolation under step
/// halving, stopping at rel_tol relative change. g vanishes outside radius
/// h, so the cube covers the support exactly.
PairIntegralResult ball_pair_integral(int d,
                                      const std::function<double(double)>& w,
                                      const std::function<double(double)>& g,
                                      std::span<const double> shift, double h,
                                      double rel_tol, int n_start = 8,
                                      int n_max = 64);

} // namespace povac
