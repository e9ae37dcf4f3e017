#include "povac/params.hpp"

#include <stdexcept>

namespace povac {

ModelParams ModelParams::from_box(int d, double nu, double R, double L, std::int64_t N) {
    ModelParams p;
    p.d = d;
    p.nu = nu;
    p.R = R;
    p.L = L;
    p.N = N;
    p.rho = static_cast<double>(N) / std::pow(L, d);
    p.validate();
    p.omega_d = unit_ball_volume(d);
    return p;
}

ModelParams ModelParams::from_density(int d, double nu, double R, double rho, std::int64_t N) {
    if (!(rho > 0.0)) throw std::invalid_argument("ModelParams: rho must be > 0");
    const double L = std::pow(static_cast<double>(N) / rho, 1.0 / d);
    return from_box(d, nu, R, L, N);
}

void ModelParams::validate() const {
    if (d < 2) throw std::invalid_argument("ModelParams: d must be >= 2");
    if (d > 8) throw std::invalid_argument("ModelParams: d larger than 8 is not supported");
    if (!(nu > 0.0)) throw std::invalid_argument("ModelParams: nu must be > 0");
    if (!(R > 0.0)) throw std::invalid_argument("ModelParams: R must be > 0");
    if (!(L > 0.0)) throw std::invalid_argument("ModelParams: L must be > 0");
    if (N < 1) throw std::invalid_argument("ModelParams: N must be >= 1");
    if (!(rho > 0.0)) throw std::invalid_argument("ModelParams: rho must be > 0");
}

} // namespace povac
