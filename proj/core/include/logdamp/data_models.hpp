#pragma once

// Catalog of initial data u1 with closed-form radial Fourier transforms and
// moments, plus the decomposition u1hat = P1 + A1 - i B1 and the empirical
// moment-bound constants.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace logdamp {

struct DatumSpec {
    std::string name;
    std::map<std::string, double> params;
    int n;
    std::function<double(double)> fourier;  // u1hat(r); real, radial
    double P1;        // u1hat(0) = integral of u1
    double norm_l1;   // L1 norm (all catalog data are nonnegative)
    double norm_11;   // ||u1||_{1,1} = int (1+|x|) u1 dx
    double norm_l2;   // L2 norm; meaningless when !in_l2
    double I0;        // norm_11 + norm_l2
    bool in_l2;       // false for the delta-like datum (profiles only)
    // int |x|^kappa u1 dx, kappa in [0,1]
    std::function<double(double)> abs_moment;

    std::string id() const;  // canonical "name:key=value,..." form
};

struct Decomposition {
    double P1;
    double A1;  // Re u1hat(xi) - P1
    double B1;  // -Im u1hat(xi); 0 for radial real data
};

// Supported: gaussian(sigma) any n; box(h) n=1; ball(h) n=3;
// delta_like(p1) any n (profiles only).
DatumSpec catalog(const std::string& name,
                  const std::map<std::string, double>& params, int n);

// Grammar: name:key=value,key=value e.g. "gaussian:sigma=1.0".
DatumSpec parse_datum(const std::string& text, int n);

Decomposition decompose(const DatumSpec& datum, double xi_r);

// Empirical constants of the moment bound |A1| <= K |xi|^kappa ||u1||_{1,kappa}:
// returns (K_hat, M_hat) maximized over the grid, M_hat for B1.
std::pair<double, double> moment_bound_constants(const DatumSpec& datum,
                                                 double kappa,
                                                 const std::vector<double>& r_grid);

}  // namespace logdamp
