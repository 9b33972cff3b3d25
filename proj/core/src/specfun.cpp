#include "logdamp/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "adaptive_gk.hpp"

namespace logdamp {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double quad_tol = 1e-12;
}

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
    return std::tgamma(x);
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta_fn: requires positive arguments");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double I_mu_exact(double mu, double t) {
    if (!(mu > 0.0)) throw std::domain_error("I_mu_exact: requires mu > 0");
    if (!(t > mu))
        throw std::domain_error("I_mu_exact: divergent integral, t <= mu");
    return beta_fn(mu, t - mu);
}

namespace {

// int_{x1}^{x2} x^{mu-1} (1+x)^{-t} dx on a finite interval with the
// endpoint substitution x = u^{1/mu} when x1 = 0 and mu < 1.
double i_mu_finite(double mu, double x1, double x2, double t) {
    if (x2 <= x1) return 0.0;
    // the mass sits in a layer of width ~1/t above lo, which a single
    // adaptive pass can miss entirely; pre-split on a geometric ladder
    const auto direct = [&](double lo, double hi) {
        const auto f = [&](double x) {
            return std::pow(x, mu - 1.0) * std::exp(-t * std::log1p(x));
        };
        double total = 0.0, a = lo;
        double b = lo + 1.0 / std::max(t, 1.0);
        while (b < hi) {
            total += detail::gk_adaptive(f, a, b, quad_tol, quad_tol).value;
            a = b;
            b = lo + (b - lo) * 4.0;
        }
        total += detail::gk_adaptive(f, a, hi, quad_tol, quad_tol).value;
        return total;
    };
    if (x1 > 0.0 || mu >= 1.0) return direct(x1, x2);
    const double split = std::min(x2, 1.0);
    // x = u^{1/mu}: int_0^split = (1/mu) int_0^{split^mu} (1+u^{1/mu})^{-t} du
    const double head =
        detail::gk_adaptive(
            [&](double u) {
                return std::exp(-t * std::log1p(std::pow(u, 1.0 / mu)));
            },
            0.0, std::pow(split, mu), quad_tol, quad_tol)
            .value /
        mu;
    return head + (x2 > split ? direct(split, x2) : 0.0);
}

// int_c^infty with c > 0 and t > mu, via x = c u^{-1/sigma}, sigma = t - mu:
// the integrand collapses to (c^mu / sigma) (u^{1/sigma} + c)^{-t} on (0,1].
double i_mu_tail(double mu, double c, double t) {
    const double sigma = t - mu;
    const double inner =
        detail::gk_adaptive(
            [&](double u) {
                return std::exp(-t *
                                std::log(std::pow(u, 1.0 / sigma) + c));
            },
            0.0, 1.0, quad_tol, quad_tol)
            .value;
    return std::exp(mu * std::log(c)) / sigma * inner;
}

}  // namespace

double I_mu_quad(double mu, double x1, double x2, double t) {
    if (x1 < 0.0 || x2 <= x1)
        throw std::domain_error("I_mu_quad: need 0 <= x1 < x2");
    if (x1 == 0.0 && !(mu > 0.0))
        throw std::domain_error("I_mu_quad: mu > 0 required when x1 = 0");
    if (std::isinf(x2)) {
        if (!(t > mu))
            throw std::domain_error("I_mu_quad: t > mu required when x2 = inf");
        const double c = std::max(x1, 1.0);
        return i_mu_finite(mu, x1, c, t) + i_mu_tail(mu, c, t);
    }
    return i_mu_finite(mu, x1, x2, t);
}

double I_mu_quad_scaled(double mu, double x1, double x2, double t,
                        double shift) {
    if (!(x1 > 0.0))
        throw std::domain_error("I_mu_quad_scaled: requires x1 > 0");
    if (std::isinf(x2) && !(t > mu))
        throw std::domain_error("I_mu_quad_scaled: t > mu required");
    // u = t (log(1+x) - log(1+x1)) concentrates the mass near x1 and keeps
    // every factor representable for arbitrarily large t.
    const double l1 = std::log1p(x1);
    const double u_max =
        std::isinf(x2) ? inf : t * (std::log1p(x2) - l1);
    const double u_cut = std::min(u_max, shift - t * l1 + 745.0);
    const double u_hi = std::min(u_cut, 60.0 + std::abs(mu) * 10.0);
    if (u_hi <= 0.0) return 0.0;
    const double base = shift - t * l1;
    const auto g = [&](double u) {
        const double x = std::expm1(l1 + u / t);
        return std::pow(x, mu - 1.0) * std::exp(base - u) * (1.0 + x) / t;
    };
    return detail::gk_adaptive(g, 0.0, u_hi, 1e-300, quad_tol).value;
}

double hyp2f1(double a, double b, double c, double z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("hyp2f1: series requires |z| < 1");
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-14 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge");
}

AsymptoticCheck gautschi_ratio(double t, double s) {
    if (!(t > s) || s < 0.0 || s > 1.0)
        throw std::domain_error("gautschi_ratio: need t > s, s in [0,1]");
    const double lhs =
        std::exp(s * std::log(t) + std::lgamma(t - s) - std::lgamma(t));
    return {t, lhs, 1.0, std::abs(lhs - 1.0)};
}

AsymptoticCheck check_beta_left(double mu, double x2, double t) {
    const double lhs = std::pow(t, mu) * I_mu_quad(mu, 0.0, x2, t);
    const double limit = gamma_fn(mu);
    return {t, lhs, limit, std::abs(lhs / limit - 1.0)};
}

AsymptoticCheck check_beta_interior(double mu, double x1, double x2,
                                     double t) {
    if (!(x1 > 0.0))
        throw std::domain_error("check_beta_interior: requires x1 > 0");
    const double shift = (t - 1.0) * std::log1p(x1);
    const double lhs = t * I_mu_quad_scaled(mu, x1, x2, t, shift);
    const double limit = std::pow(x1, mu - 1.0);
    return {t, lhs, limit, std::abs(lhs / limit - 1.0)};
}

AsymptoticCheck check_radial_left(double p, double theta, double eta2,
                                     double t) {
    if (!(theta > 0.0) || !(p > -1.0))
        throw std::domain_error("check_radial_left: theta > 0, p > -1");
    const double mu = (p + 1.0) / (2.0 * theta);
    const double x2 =
        std::isinf(eta2) ? inf : std::pow(eta2, 2.0 * theta);
    const double I = I_mu_quad(mu, 0.0, x2, t) / (2.0 * theta);
    const double lhs = std::pow(t, mu) * I;
    const double limit = gamma_fn(mu) / (2.0 * theta);
    return {t, lhs, limit, std::abs(lhs / limit - 1.0)};
}

AsymptoticCheck check_radial_interior(double eta, double p, double theta,
                                         double eta2, double t) {
    if (!(eta > 0.0) || !(theta > 0.0))
        throw std::domain_error("check_radial_interior: eta, theta > 0");
    const double mu = (p + 1.0) / (2.0 * theta);
    const double x1 = std::pow(eta, 2.0 * theta);
    const double x2 =
        std::isinf(eta2) ? inf : std::pow(eta2, 2.0 * theta);
    const double shift = (t - 1.0) * std::log1p(x1);
    const double lhs =
        t * I_mu_quad_scaled(mu, x1, x2, t, shift) / (2.0 * theta);
    const double limit =
        std::pow(eta, p + 1.0 - 2.0 * theta) / (2.0 * theta);
    return {t, lhs, limit, std::abs(lhs / limit - 1.0)};
}

std::vector<AsymptoticCheck> limit_checks(double mu, double x1, double x2,
                                          double theta, double p, double eta) {
    std::vector<AsymptoticCheck> out;
    for (double e = 2.0; e <= 4.01; e += 0.5) {
        const double t = std::pow(10.0, e);
        out.push_back(check_beta_left(mu, x2, t));
        if (x1 > 0.0) out.push_back(check_beta_interior(mu, x1, x2, t));
        out.push_back(check_radial_left(p, theta, x2, t));
        out.push_back(check_radial_interior(eta, p, theta, inf, t));
    }
    return out;
}

double A_const(int n, double theta, bool first_form) {
    if (!(theta > 0.0)) throw std::domain_error("A_const: theta > 0");
    if (first_form) {
        if (n <= 2)
            throw std::domain_error("A_const: first form diverges for n <= 2");
        return gamma_fn((n - 2) / (2.0 * theta)) / (2.0 * theta);
    }
    const double q = (3.0 * theta + n - 2.0) / theta;
    return detail::gk_adaptive(
               [&](double s) { return std::pow(s, q) * std::exp(-s * s); },
               0.0, 1.0, 1e-14, 1e-14)
        .value;
}

}  // namespace logdamp
