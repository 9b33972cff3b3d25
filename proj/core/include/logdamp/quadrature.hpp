#pragma once

// Radial n-dimensional integrals of spectral quantities,
// int_{R^n} F(|xi|) dxi = omega_n int_0^inf F(r) r^{n-1} dr,
// including the oscillatory sin^2(rt), cos^2(rt) weights at large t.

#include <functional>

#include "logdamp/symbols.hpp"

namespace logdamp {

struct QuadratureResult {
    double value;
    double err_est;
    int panels;
    double tail_bound;  // bound on the truncated remainder
};

struct RadialIntegrand {
    std::function<double(double)> f;  // value at r, without the r^{n-1} weight
    // bound on omega_n int_R^inf f r^{n-1} dr, used to pick the cutoff
    std::function<double(double)> tail_bound;
};

double sphere_area(int n);  // omega_n = 2 pi^{n/2} / Gamma(n/2)

QuadratureResult radial_integral(const RadialIntegrand& f, int n, double tol);

// The weighted integrals int_0^inf (1+r^{2 theta})^{-t} w(r) r^{n-1} dr with
//   sin2_over_r2:          w = sin^2(rt)/r^2            (M(t), displacement)
//   cos2:                  w = cos^2(rt)                (I_cos)
//   sin2_times_a2_over_r2: w = a(r)^2 sin^2(rt)/r^2     (I_sin)
//   plain:                 w = 1
// evaluated in the scaled variable s = t^{1/(2 theta)} r with
// oscillation-resolving panels.
enum class OscKind { sin2_over_r2, cos2, sin2_times_a2_over_r2, plain };

QuadratureResult oscillatory_norm2(OscKind kind, int n,
                                   const DampingParams& params, double t,
                                   double tol);

// F_{n,theta}(t) = int_0^inf e^{-s^{2 theta}} s^{n-3} cos(2 t^{(2 theta-1)/(2 theta)} s) ds,
// the Riemann-Lebesgue remainder; requires n > 2.
double riemann_lebesgue_probe(int n, const DampingParams& params, double t);

// Physical-space L2 norm of the radial Fourier amplitude:
// (2 pi)^{-n/2} sqrt(omega_n int_{r_min}^inf |amplitude(r)|^2 r^{n-1} dr).
// t sets the panel width needed to resolve sin(rt)/cos(rt) oscillation.
double spectral_l2(const std::function<double(double)>& amplitude, int n,
                   double t, double tol, double r_min = 0.0);

}  // namespace logdamp
