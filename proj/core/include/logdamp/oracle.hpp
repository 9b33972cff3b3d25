#pragma once

// Brute-force validators: a classical RK4 integrator for single modes and a
// composite-trapezoid quadrature.  Test support only; never used by the
// production paths.

#include <complex>
#include <functional>
#include <vector>

#include "logdamp/symbols.hpp"

namespace logdamp {

struct OdeRun {
    double r;
    double theta;
    double dt;
    double T;
    std::vector<double> t;                 // sample times (sparse)
    std::vector<std::complex<double>> u;
    std::vector<std::complex<double>> v;

    std::complex<double> u_final() const { return u.back(); }
    std::complex<double> v_final() const { return v.back(); }
};

// Integrates u' = v, v' = -L v - r^2 u from (0, u1hat) on [0, T].
// Rejects steps violating dt * max|lambda| < 0.1 and detects energy growth.
OdeRun rk4_mode(double r, const DampingParams& params, double T, double dt,
                std::complex<double> u1hat);

// Composite trapezoid on [a, b] with m subintervals (m >= 1000).
double brute_quadrature(const std::function<double(double)>& f, double a,
                        double b, int m);

}  // namespace logdamp
