#include "logdamp/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "adaptive_gk.hpp"

namespace logdamp {

double sphere_area(int n) {
    if (n < 1) throw std::domain_error("sphere_area: n >= 1");
    return 2.0 * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0);
}

QuadratureResult radial_integral(const RadialIntegrand& f, int n, double tol) {
    if (n < 1) throw std::domain_error("radial_integral: n >= 1");
    const double wn = sphere_area(n);
    double R = 1.0;
    double tail = f.tail_bound(R);
    while (tail > tol / 2.0 && R < 1e8) {
        R *= 2.0;
        tail = f.tail_bound(R);
    }
    if (tail > tol / 2.0)
        throw std::runtime_error("radial_integral: tail bound never met");
    const auto g = [&](double r) {
        return f.f(r) * std::pow(r, n - 1);
    };
    const auto res = detail::gk_adaptive(g, 0.0, R, tol / 2.0, 1e-12);
    if (!std::isfinite(res.value))
        throw std::runtime_error("radial_integral: divergent integrand");
    return {wn * res.value, wn * res.err, res.panels, tail};
}

namespace {

// upper cutoff in s for the envelope exp(-t log1p(s^{2theta}/t)) s^m:
// on s^{2theta} <= t the envelope is below e^{-s^{2theta}/2}, so solve
// e^{-S^{2theta}/2} S^m = tol/10 by fixed-point iteration.
double s_cutoff(double theta, int m, double tol) {
    double S = 5.0;
    for (int i = 0; i < 60; ++i) {
        const double rhs = 2.0 * (m * std::log(std::max(S, 1.0)) +
                                  std::log(10.0 / tol));
        S = std::pow(std::max(rhs, 1.0), 1.0 / (2.0 * theta));
    }
    return S;
}

// Fixed-width panel sweep with GK15 per panel, ascending compensated sum.
template <typename F>
QuadratureResult panel_sweep(const F& f, double s_lo, double s_hi,
                             double width, double tail_bound) {
    detail::KahanSum sum, errs;
    int panels = 0;
    double s = s_lo;
    while (s < s_hi) {
        const double e = std::min(s + width, s_hi);
        const auto p = detail::gk15(f, s, e);
        sum.add(p.value);
        errs.add(p.err);
        ++panels;
        s = e;
    }
    return {sum.get(), errs.get(), panels, tail_bound};
}

}  // namespace

QuadratureResult oscillatory_norm2(OscKind kind, int n,
                                   const DampingParams& params, double t,
                                   double tol) {
    if (n < 1) throw std::domain_error("oscillatory_norm2: n >= 1");
    if (!(t >= 1.0)) throw std::domain_error("oscillatory_norm2: t >= 1");
    const double theta = params.theta;
    const double inv = 1.0 / (2.0 * theta);
    const double scale = std::pow(t, inv);      // r = s / scale
    const double omega = t / scale;             // phase of sin(rt) in s
    // weight exponents: the r-powers of w(r) pulled into the s variable
    int m = n - 1;
    if (kind == OscKind::sin2_over_r2 || kind == OscKind::sin2_times_a2_over_r2)
        m = n - 3;
    const double S = s_cutoff(theta, std::max(m, 0), tol);
    const double width =
        std::min(0.5, M_PI / (2.0 * std::max(omega, 1e-30)));

    const auto f = [&](double s) {
        const double r = s / scale;
        const double env = std::exp(-t * std::log1p(std::pow(s, 2.0 * theta) / t));
        double w;
        switch (kind) {
            case OscKind::sin2_over_r2: {
                const double sn = std::sin(omega * s);
                w = sn * sn * std::pow(s, n - 3);
                break;
            }
            case OscKind::sin2_times_a2_over_r2: {
                const double sn = std::sin(omega * s);
                const double a = log_symbol(r, params) / 2.0;
                w = a * a * sn * sn * std::pow(s, n - 3);
                break;
            }
            case OscKind::cos2: {
                const double cs = std::cos(omega * s);
                w = cs * cs * std::pow(s, n - 1);
                break;
            }
            case OscKind::plain:
                w = std::pow(s, n - 1);
                break;
        }
        return env * w;
    };
    auto res = panel_sweep(f, 0.0, S, width, tol / 10.0);
    // undo the substitution: dr = ds/scale and each 1/r^2 contributed scale^2
    double pref = std::pow(scale, -n);
    if (kind == OscKind::sin2_over_r2 || kind == OscKind::sin2_times_a2_over_r2)
        pref = std::pow(scale, 2.0 - n);
    const double wn = sphere_area(n);
    res.value *= wn * pref;
    res.err_est *= wn * pref;
    return res;
}

double riemann_lebesgue_probe(int n, const DampingParams& params, double t) {
    if (n <= 2)
        throw std::domain_error("riemann_lebesgue_probe: requires n > 2");
    if (!(t >= 1.0))
        throw std::domain_error("riemann_lebesgue_probe: t >= 1");
    const double theta = params.theta;
    const double omega =
        2.0 * std::pow(t, (2.0 * theta - 1.0) / (2.0 * theta));
    const double S = s_cutoff(theta, n - 3, 1e-12) * 2.0;
    const double width = std::min(0.5, M_PI / (2.0 * omega));
    const auto f = [&](double s) {
        return std::exp(-std::pow(s, 2.0 * theta)) * std::pow(s, n - 3) *
               std::cos(omega * s);
    };
    return panel_sweep(f, 0.0, S, width, 0.0).value;
}

double spectral_l2(const std::function<double(double)>& amplitude, int n,
                   double t, double tol, double r_min) {
    if (n < 1) throw std::domain_error("spectral_l2: n >= 1");
    const double width = std::min(0.5, M_PI / (2.0 * std::max(t, 1.0)));
    const auto f = [&](double r) {
        const double a = amplitude(r);
        return a * a * std::pow(r, n - 1);
    };
    detail::KahanSum sum;
    double s = r_min;
    int quiet_blocks = 0;
    const int panels_per_block = 64;
    for (int block = 0; block < 40000 && quiet_blocks < 2; ++block) {
        double contrib = 0.0;
        for (int i = 0; i < panels_per_block; ++i) {
            const auto p = detail::gk15(f, s, s + width);
            sum.add(p.value);
            contrib += std::abs(p.value);
            s += width;
        }
        if (contrib <= tol * std::max(sum.get(), 1e-300))
            ++quiet_blocks;
        else
            quiet_blocks = 0;
    }
    const double val = std::max(sum.get(), 0.0);
    return std::pow(2.0 * M_PI, -n / 2.0) * std::sqrt(sphere_area(n) * val);
}

}  // namespace logdamp
