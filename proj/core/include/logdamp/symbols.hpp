#pragma once

// Fourier symbols of the damped wave operator u_tt - Laplace(u) + log(I + (-Laplace)^theta) u_t.
//
// Per radial frequency r = |xi| the mode obeys  y'' + L(r) y' + r^2 y = 0
// with L(r) = log(1 + r^{2theta}).  This header evaluates L, the
// characteristic roots, the auxiliary functions g, h, and the frequency
// thresholds delta0, delta1, B and the spectral abscissa gamma that split
// the low- and high-frequency zones.

#include <complex>
#include <utility>

namespace logdamp {

struct DampingParams {
    double theta;

    explicit DampingParams(double theta_);

    // Throws std::domain_error unless theta > 1/2.
    void require_supersonic() const;
};

enum class RootBranch { complex_pair, double_root, real_pair };

struct SymbolEval {
    double r;          // radial frequency
    double L;          // log(1 + r^{2theta})
    double a;          // L/2, real part of -lambda on the complex branch
    double disc;       // 4 r^2 - L^2
    RootBranch branch;
};

struct Thresholds {
    double delta0;  // g(r) <= 1/2 on (0, delta0], delta0 <= 1
    double delta1;  // |(b - r)/b| <= r^{4theta-2} on (0, delta1], delta1 <= delta0
    double B;       // L(r) <= r for all r >= B, B >= 1
    double gamma;   // inf over r >= delta1 of Re(-lambda_+)
};

// L(r) = log(1 + r^{2theta}); 0 <= L(r) <= r^{2theta}.
double log_symbol(double r, const DampingParams& params);

// 4 r^2 - L(r)^2.  Positive branch <=> complex roots.
double discriminant(double r, const DampingParams& params);

SymbolEval symbol_eval(double r, const DampingParams& params);

// Roots of lambda^2 + L lambda + r^2 = 0, ordered Re(lambda_+) >= Re(lambda_-).
std::pair<std::complex<double>, std::complex<double>>
roots(double r, const DampingParams& params);

// (a, b) with lambda_{+-} = -a +- i b; only valid on the complex branch,
// otherwise throws std::domain_error directing callers to roots().
std::pair<double, double> ab(double r, const DampingParams& params);

// g(r) = L^2 / (4 r^2) and h(r) = -1 / (1 - g + sqrt(1 - g));
// (b - r)/b = g h wherever the complex branch holds.
std::pair<double, double> g_h(double r, const DampingParams& params);

Thresholds thresholds(const DampingParams& params);

namespace detail {
// Relative discriminant tolerance below which roots are treated as a double root.
inline constexpr double branch_tol = 1e-10;
}

}  // namespace logdamp
