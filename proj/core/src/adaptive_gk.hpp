#pragma once

// Internal Gauss-Kronrod 7-15 quadrature, plain and adaptive.  Recursion is
// left-to-right so contributions accumulate in ascending order regardless of
// how many callers run in parallel.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace logdamp::detail {

// QUADPACK qk15 nodes and weights on [-1, 1].
inline constexpr double gk_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GKPanel {
    double value;
    double err;
};

template <typename F>
GKPanel gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = gk_wk[7] * fc;
    double resg = gk_wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk_x[j];
        const double fsum = f(c - dx) + f(c + dx);
        resk += gk_wk[j] * fsum;
        if (j % 2 == 1) resg += gk_wg[j / 2] * fsum;
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

struct GKResult {
    double value;
    double err;
    int panels;
};

template <typename F>
void gk_adaptive_rec(const F& f, double a, double b, double tol, int depth,
                     GKResult& acc) {
    const GKPanel p = gk15(f, a, b);
    if (p.err <= tol || depth >= 48) {
        acc.value += p.value;
        acc.err += p.err;
        acc.panels += 1;
        return;
    }
    const double m = 0.5 * (a + b);
    gk_adaptive_rec(f, a, m, 0.5 * tol, depth + 1, acc);
    gk_adaptive_rec(f, m, b, 0.5 * tol, depth + 1, acc);
}

template <typename F>
GKResult gk_adaptive(const F& f, double a, double b, double abs_tol,
                     double rel_tol) {
    if (!(b >= a)) throw std::invalid_argument("gk_adaptive: b < a");
    GKResult acc{0.0, 0.0, 0};
    const GKPanel whole = gk15(f, a, b);
    const double tol =
        std::max(abs_tol, rel_tol * std::abs(whole.value));
    gk_adaptive_rec(f, a, b, std::max(tol, 1e-300), 0, acc);
    return acc;
}

// Compensated (Kahan) accumulator for deterministic panel sums.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double get() const { return s; }
};

}  // namespace logdamp::detail
