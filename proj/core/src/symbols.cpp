#include "logdamp/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace logdamp {

DampingParams::DampingParams(double theta_) : theta(theta_) {
    if (!(theta > 0.0))
        throw std::domain_error("DampingParams: theta must be positive");
}

void DampingParams::require_supersonic() const {
    if (!(theta > 0.5))
        throw std::domain_error("DampingParams: operation requires theta > 1/2");
}

double log_symbol(double r, const DampingParams& params) {
    if (r < 0.0) throw std::domain_error("log_symbol: negative radius");
    if (r == 0.0) return 0.0;
    return std::log1p(std::pow(r, 2.0 * params.theta));
}

double discriminant(double r, const DampingParams& params) {
    const double L = log_symbol(r, params);
    return 4.0 * r * r - L * L;
}

SymbolEval symbol_eval(double r, const DampingParams& params) {
    const double L = log_symbol(r, params);
    const double disc = 4.0 * r * r - L * L;
    RootBranch branch;
    if (std::abs(disc) < detail::branch_tol * std::max(1.0, 4.0 * r * r))
        branch = RootBranch::double_root;
    else
        branch = disc > 0.0 ? RootBranch::complex_pair : RootBranch::real_pair;
    return SymbolEval{r, L, L / 2.0, disc, branch};
}

std::pair<std::complex<double>, std::complex<double>>
roots(double r, const DampingParams& params) {
    const SymbolEval s = symbol_eval(r, params);
    switch (s.branch) {
        case RootBranch::complex_pair: {
            const double b = 0.5 * std::sqrt(s.disc);
            return {{-s.a, b}, {-s.a, -b}};
        }
        case RootBranch::double_root:
            return {{-s.a, 0.0}, {-s.a, 0.0}};
        case RootBranch::real_pair: {
            // lambda_- = -(L + sqrt(L^2 - 4r^2))/2, lambda_+ = r^2 / lambda_-
            const double root = std::sqrt(-s.disc);
            const double lm = -0.5 * (s.L + root);
            const double lp = (r == 0.0) ? 0.0 : -2.0 * r * r / (s.L + root);
            return {{lp, 0.0}, {lm, 0.0}};
        }
    }
    throw std::logic_error("roots: unreachable");
}

std::pair<double, double> ab(double r, const DampingParams& params) {
    const SymbolEval s = symbol_eval(r, params);
    if (s.branch != RootBranch::complex_pair)
        throw std::domain_error(
            "ab: non-complex branch (use roots() for real or double roots)");
    return {s.a, 0.5 * std::sqrt(s.disc)};
}

std::pair<double, double> g_h(double r, const DampingParams& params) {
    if (!(r > 0.0)) throw std::domain_error("g_h: requires r > 0");
    const double L = log_symbol(r, params);
    const double g = L * L / (4.0 * r * r);
    if (g >= 1.0)
        throw std::domain_error("g_h: g(r) >= 1, b(r) undefined");
    const double h = -1.0 / (1.0 - g + std::sqrt(1.0 - g));
    return {g, h};
}

namespace {

// Largest radius d in (lo, hi] such that pred holds on the whole of (lo, d],
// located by a forward scan plus bisection of the first violation.
double first_violation(double lo, double hi, int samples,
                       const std::function<bool(double)>& ok) {
    double prev = lo;
    for (int i = 1; i <= samples; ++i) {
        const double r = lo + (hi - lo) * static_cast<double>(i) / samples;
        if (!ok(r)) {
            double a = prev, b = r;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                (ok(m) ? a : b) = m;
            }
            return a;
        }
        prev = r;
    }
    return hi;
}

double golden_min(const std::function<double(double)>& f, double a, double b) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-12 * std::max(1.0, std::abs(a))) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

double neg_real_part_plus(double r, const DampingParams& params) {
    return -roots(r, params).first.real();
}

}  // namespace

Thresholds thresholds(const DampingParams& params) {
    params.require_supersonic();
    const double theta = params.theta;

    const auto g_ok = [&](double r) {
        return g_h(r, params).first <= 0.5;
    };
    const double delta0 = first_violation(1e-8, 1.0, 2048, g_ok);

    // delta1: |(b - r)/b| = g|h| <= C r^{4theta-2} with C fixed to 1.
    const auto gh_ok = [&](double r) {
        const auto [g, h] = g_h(r, params);
        return std::abs(g * h) <= std::pow(r, 4.0 * theta - 2.0);
    };
    const double delta1 = first_violation(1e-8, delta0, 2048, gh_ok);

    // B: last crossing of L(r) - r on [1, Rmax], or 1 if L < r throughout.
    const double rmax = 20.0 + 8.0 * theta * std::log(1.0 + 4.0 * theta);
    double B = 1.0;
    const int m = 8192;
    double prev = 1.0;
    bool prev_above = log_symbol(1.0, params) >= 1.0;
    for (int i = 1; i <= m; ++i) {
        const double r = 1.0 + (rmax - 1.0) * static_cast<double>(i) / m;
        const bool above = log_symbol(r, params) >= r;
        if (prev_above && !above) {
            double a = prev, b = r;
            while (b - a > 1e-10) {
                const double mid = 0.5 * (a + b);
                (log_symbol(mid, params) >= mid ? a : b) = mid;
            }
            B = 0.5 * (a + b);
        }
        prev = r;
        prev_above = above;
    }
    B = std::max(B, 1.0);

    // gamma = inf_{r >= delta1} Re(-lambda_+).  Beyond max(B, delta1) the
    // branch is complex and a(r) increases, so the scan stops there.
    const double rtail = std::max({B, 2.0 * delta1, 2.0});
    const int k = 4096;
    std::vector<double> rs(k + 1), fs(k + 1);
    const double lr0 = std::log(delta1), lr1 = std::log(rtail);
    int imin = 0;
    for (int i = 0; i <= k; ++i) {
        rs[i] = std::exp(lr0 + (lr1 - lr0) * i / k);
        fs[i] = neg_real_part_plus(rs[i], params);
        if (fs[i] < fs[imin]) imin = i;
    }
    double gamma = fs[imin];
    const double lo = rs[std::max(imin - 1, 0)];
    const double hi = rs[std::min(imin + 1, k)];
    if (hi > lo)
        gamma = std::min(gamma, golden_min(
            [&](double r) { return neg_real_part_plus(r, params); }, lo, hi));

    return Thresholds{delta0, delta1, B, gamma};
}

}  // namespace logdamp
