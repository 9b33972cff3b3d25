#include "logdamp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logdamp/propagator.hpp"

namespace logdamp {

OdeRun rk4_mode(double r, const DampingParams& params, double T, double dt,
                std::complex<double> u1hat) {
    if (!(dt > 0.0) || T < 0.0)
        throw std::domain_error("rk4_mode: need dt > 0, T >= 0");
    if (T > 100.0)
        throw std::domain_error("rk4_mode: oracle horizon capped at T = 100");
    const double L = log_symbol(r, params);
    const auto [lp, lm] = roots(r, params);
    const double lmax = std::max(std::abs(lp), std::abs(lm));
    if (dt * lmax >= 0.1)
        throw std::invalid_argument("rk4_mode: dt too large for |lambda|");

    const long nsteps = std::lround(std::ceil(T / dt));
    const long stride = std::max(1L, nsteps / 1000);
    const double r2 = r * r;

    OdeRun run;
    run.r = r;
    run.theta = params.theta;
    run.dt = dt;
    run.T = T;

    std::complex<double> u = 0.0, v = u1hat;
    const double e0 = 0.5 * (std::norm(v) + r2 * std::norm(u));
    auto rhs_v = [&](std::complex<double> uu, std::complex<double> vv) {
        return -L * vv - r2 * uu;
    };
    run.t.push_back(0.0);
    run.u.push_back(u);
    run.v.push_back(v);
    for (long i = 0; i < nsteps; ++i) {
        const double h = std::min(dt, T - i * dt);
        if (h <= 0.0) break;
        const auto k1u = v, k1v = rhs_v(u, v);
        const auto k2u = v + 0.5 * h * k1v,
                   k2v = rhs_v(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
        const auto k3u = v + 0.5 * h * k2v,
                   k3v = rhs_v(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
        const auto k4u = v + h * k3v, k4v = rhs_v(u + h * k3u, v + h * k3v);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        const double e = 0.5 * (std::norm(v) + r2 * std::norm(u));
        if (e > e0 * (1.0 + 1e-8))
            throw std::runtime_error("rk4_mode: energy growth, step unstable");
        if ((i + 1) % stride == 0 || i == nsteps - 1) {
            run.t.push_back(std::min((i + 1) * dt, T));
            run.u.push_back(u);
            run.v.push_back(v);
        }
    }
    return run;
}

double brute_quadrature(const std::function<double(double)>& f, double a,
                        double b, int m) {
    if (m < 1000) throw std::invalid_argument("brute_quadrature: m >= 1000");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("brute_quadrature: finite interval only");
    const double h = (b - a) / m;
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < m; ++i) sum += f(a + i * h);
    return sum * h;
}

}  // namespace logdamp
