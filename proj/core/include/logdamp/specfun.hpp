#pragma once

// Gamma/Beta, the Gauss hypergeometric series, the Beta-type integrals
// I_{mu;x1,x2}(t) = int_{x1}^{x2} x^{mu-1} (1+x)^{-t} dx with their closed
// forms, and the asymptotic limit checks behind the decay-rate machinery.

#include <vector>

namespace logdamp {

struct AsymptoticCheck {
    double t;
    double lhs;     // scaled quantity at t
    double limit;   // predicted limit
    double relerr;  // |lhs/limit - 1|
};

double gamma_fn(double x);
double beta_fn(double a, double b);

// B(mu, t - mu); requires 0 < mu < t.
double I_mu_exact(double mu, double t);

// Adaptive quadrature of the integral itself.  x2 may be infinity
// (then t > mu required); mu > 0 required when x1 = 0.
double I_mu_quad(double mu, double x1, double x2, double t);

// exp(shift) * I_{mu;x1,x2}(t) assembled without underflow, for the scaled
// limits where (1+x1)^{t-1} I is the quantity of interest.  Requires x1 > 0.
double I_mu_quad_scaled(double mu, double x1, double x2, double t,
                        double shift);

// Raw series, |z| < 1 only.
double hyp2f1(double a, double b, double c, double z);

// lhs = t^s Gamma(t-s)/Gamma(t), limit 1.
AsymptoticCheck gautschi_ratio(double t, double s);

// The four limit statements, each evaluated at a single t:
//   t^mu I_{mu;0,x2}(t)                -> Gamma(mu)
//   (1+x1)^{t-1} t I_{mu;x1,x2}(t)     -> x1^{mu-1}
//   t^{(p+1)/(2 theta)} I_{p,theta}(t) -> Gamma((p+1)/(2 theta))/(2 theta)
//   (1+eta^{2 theta})^{t-1} t J(t)     -> eta^{p+1-2 theta}/(2 theta)
// where I_{p,theta} and J are the radial integrals int (1+r^{2 theta})^{-t} r^p dr
// over (0, eta2) and (eta, eta2), reduced to I_mu by the change of variable
// x = r^{2 theta}.
AsymptoticCheck check_beta_left(double mu, double x2, double t);
AsymptoticCheck check_beta_interior(double mu, double x1, double x2, double t);
AsymptoticCheck check_radial_left(double p, double theta, double eta2, double t);
AsymptoticCheck check_radial_interior(double eta, double p, double theta,
                                         double eta2, double t);

// All four statements sampled along the geometric grid t = 10^2 .. 10^4.
std::vector<AsymptoticCheck> limit_checks(double mu, double x1, double x2,
                                          double theta, double p, double eta);

// A_{n,theta}: Gamma((n-2)/(2 theta))/(2 theta) when first_form (needs n > 2),
// otherwise the quadrature int_0^1 s^{(3 theta + n - 2)/theta} e^{-s^2} ds.
double A_const(int n, double theta, bool first_form);

}  // namespace logdamp
