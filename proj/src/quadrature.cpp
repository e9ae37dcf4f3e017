#include "povac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace povac {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tol, int max_depth) {
    if (!(b >= a)) throw std::invalid_argument("integrate: b must be >= a");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

namespace {

/// Midpoint-rule value of the pair integral at n points per axis.
double midpoint_pair(int d, const std::function<double(double)>& w,
                     const std::function<double(double)>& g,
                     std::span<const double> shift, double h, int n) {
    const double step = 2.0 * h / n;
    // Grid points with nonzero g^2, flattened.
    std::vector<double> coords;
    std::vector<double> weights;
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            x[static_cast<std::size_t>(a)] = -h + (idx[static_cast<std::size_t>(a)] + 0.5) * step;
            r2 += x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
        }
        const double gv = g(std::sqrt(r2));
        if (gv != 0.0) {
            coords.insert(coords.end(), x.begin(), x.end());
            weights.push_back(gv * gv);
        }
        int a = d - 1;
        while (a >= 0) {
            if (++idx[static_cast<std::size_t>(a)] < n) break;
            idx[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }

    const std::size_t m = weights.size();
    double sum = 0.0;
    std::vector<double> delta(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < m; ++i) {
        const double* xi = coords.data() + i * static_cast<std::size_t>(d);
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double* yj = coords.data() + j * static_cast<std::size_t>(d);
            double dist2 = 0.0;
            for (int a = 0; a < d; ++a) {
                const double dd = xi[a] - yj[a] - shift[static_cast<std::size_t>(a)];
                dist2 += dd * dd;
            }
            row += w(std::sqrt(dist2)) * weights[j];
        }
        sum += row * weights[i];
    }
    return sum * std::pow(step, 2 * d);
}

} // namespace

PairIntegralResult ball_pair_integral(int d, const std::function<double(double)>& w,
                                      const std::function<double(double)>& g,
                                      std::span<const double> shift, double h,
                                      double rel_tol, int n_start, int n_max) {
    PairIntegralResult res;
    double prev_plain = 0.0, prev_extrap = 0.0;
    bool have_prev = false, have_extrap = false;
    for (int n = n_start; n <= n_max; n *= 2) {
        const double plain = midpoint_pair(d, w, g, shift, h, n);
        if (have_prev) {
            // Midpoint error is O(step^2) for smooth integrands.
            const double extrap = (4.0 * plain - prev_plain) / 3.0;
            if (have_extrap) {
                const double denom = std::max(std::abs(extrap), 1e-300);
                res.rel_change = std::abs(extrap - prev_extrap) / denom;
                res.value = extrap;
                if (res.rel_change <= rel_tol) {
                    res.converged = true;
                    return res;
                }
            } else {
                res.value = extrap;
            }
            prev_extrap = extrap;
            have_extrap = true;
        }
        prev_plain = plain;
        have_prev = true;
    }
    if (!have_extrap) res.value = prev_plain;
    return res;
}

} // namespace povac
