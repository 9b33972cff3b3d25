#pragma once

// Exact solution of one Fourier mode y'' + L(r) y' + r^2 y = 0 with
// y(0) = 0, y'(0) = u1hat, together with the asymptotic profiles
// P1 e^{-tL/2} sin(rt)/r (displacement) and P1 e^{-tL/2} cos(rt) (velocity)
// and their residuals.

#include <complex>

#include "logdamp/symbols.hpp"

namespace logdamp {

struct ModeState {
    std::complex<double> u;  // displacement amplitude
    std::complex<double> v;  // velocity amplitude
    double t;
    double r;
};

enum class ProfileKind { displacement, velocity };

// Unified across all three root branches via the kernels
//   S(q,t) = sin(sqrt(q) t)/sqrt(q), C(q,t) = cos(sqrt(q) t)  (q > 0)
// with hyperbolic counterparts for q < 0 and a power series near q = 0,
// where q = r^2 - L^2/4.
ModeState mode_solution(double r, const DampingParams& params, double t,
                        std::complex<double> u1hat);

// Same solution multiplied by exp(log_scale); the product is assembled in
// log space so e.g. log_scale = gamma*t recovers high-frequency amplitudes
// that would otherwise underflow.
ModeState mode_solution_scaled(double r, const DampingParams& params, double t,
                               std::complex<double> u1hat, double log_scale);

double profile(ProfileKind kind, double r, const DampingParams& params,
               double t, double P1);

// mode_solution minus profile, by direct subtraction.
std::complex<double> residual(ProfileKind kind, double r,
                              const DampingParams& params, double t,
                              std::complex<double> datum_fourier, double P1);

// (|v|^2 + r^2 |u|^2) / 2, non-increasing in t.
double mode_energy(const ModeState& state);

}  // namespace logdamp
