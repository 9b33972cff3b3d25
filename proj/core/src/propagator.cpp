#include "logdamp/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace logdamp {

namespace {

// S(q,t) = sin(sqrt(q) t)/sqrt(q) and C(q,t) = cos(sqrt(q) t) continued
// through q <= 0; power series in z = q t^2 near the branch point.
void kernels(double q, double t, double& S, double& C) {
    const double z = q * t * t;
    if (std::abs(z) < 1e-4) {
        S = t * (1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0);
        C = 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0;
    } else if (q > 0.0) {
        const double w = std::sqrt(q);
        S = std::sin(w * t) / w;
        C = std::cos(w * t);
    } else {
        const double p = std::sqrt(-q);
        S = std::sinh(p * t) / p;
        C = std::cosh(p * t);
    }
}

}  // namespace

ModeState mode_solution_scaled(double r, const DampingParams& params, double t,
                               std::complex<double> u1hat, double log_scale) {
    if (t < 0.0) throw std::domain_error("mode_solution: negative t");
    const double L = log_symbol(r, params);
    const double a = L / 2.0;
    const double q = r * r - a * a;

    if (q < 0.0 && -q * t * t >= 1e-4) {
        // overdamped: split into the two exponentials so the slow mode
        // survives when e^{-at} alone would underflow
        const double p = std::sqrt(-q);  // p < a
        const double ep = std::exp((p - a) * t + log_scale);
        const double em = std::exp(-(p + a) * t + log_scale);
        const std::complex<double> u = u1hat * (ep - em) / (2.0 * p);
        const std::complex<double> v =
            u1hat * ((1.0 - a / p) * ep + (1.0 + a / p) * em) / 2.0;
        return {u, v, t, r};
    }

    double S, C;
    kernels(q, t, S, C);
    const double amp = std::exp(-a * t + log_scale);
    const std::complex<double> u = u1hat * (amp * S);
    const std::complex<double> v = u1hat * (amp * (C - a * S));
    return {u, v, t, r};
}

ModeState mode_solution(double r, const DampingParams& params, double t,
                        std::complex<double> u1hat) {
    return mode_solution_scaled(r, params, t, u1hat, 0.0);
}

double profile(ProfileKind kind, double r, const DampingParams& params,
               double t, double P1) {
    if (t < 0.0) throw std::domain_error("profile: negative t");
    const double amp = P1 * std::exp(-t * log_symbol(r, params) / 2.0);
    if (kind == ProfileKind::velocity) return amp * std::cos(r * t);
    const double x = r * t;
    const double sinc = std::abs(x) < 1e-8
                            ? t * (1.0 - x * x / 6.0)
                            : std::sin(x) / r;
    return amp * sinc;
}

std::complex<double> residual(ProfileKind kind, double r,
                              const DampingParams& params, double t,
                              std::complex<double> datum_fourier, double P1) {
    const ModeState s = mode_solution(r, params, t, datum_fourier);
    const double prof = profile(kind, r, params, t, P1);
    return (kind == ProfileKind::displacement ? s.u : s.v) - prof;
}

double mode_energy(const ModeState& state) {
    return 0.5 * (std::norm(state.v) + state.r * state.r * std::norm(state.u));
}

}  // namespace logdamp
