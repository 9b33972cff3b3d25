#pragma once

// Norm-vs-time curves, growth/decay law fitting, and the aggregated
// pass/fail report against the predicted rates.

#include <optional>
#include <string>
#include <vector>

#include "logdamp/data_models.hpp"
#include "logdamp/symbols.hpp"

namespace logdamp {

enum class Quantity {
    u_l2,
    grad_l2,
    ut_l2,
    energy,       // E(t) = (||u_t||^2 + ||grad u||^2)/2; the reported
                  // energy-norm exponent is half the fitted slope of E
    profile_u,
    profile_ut,
    residual_u,
    residual_ut,
    highfreq_u,   // L2 over the zone r >= delta1 only
    highfreq_ut,
};

std::string quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string& name);

struct NormCurve {
    Quantity quantity;
    std::vector<double> t;       // strictly increasing, positive
    std::vector<double> values;  // positive
    int n;
    double theta;
    std::string datum_id;
};

enum class GrowthModel { power, log_sqrt, sqrt_t };

std::string model_name(GrowthModel m);

struct RateFit {
    GrowthModel model;
    double exponent;   // power model slope; unused otherwise
    double amplitude;  // C in v = C t^alpha, v^2 = C log t, or v^2 = C t
    double r2;
    double window_lo, window_hi;  // fitted t-subrange
};

struct PredictedLaw {
    GrowthModel model;
    double exponent;   // for the power model
    bool one_sided;    // upper-bound-only claims (the residual quantities)
};

std::vector<double> geometric_grid(double t_min, double t_max, int points);

NormCurve norm_curve(Quantity quantity, const DatumSpec& datum, int n,
                     const DampingParams& params,
                     const std::vector<double>& t_grid, double tol,
                     int threads = 1);

// Least squares on (ln t, ln v) over the top window_fraction of the
// logarithmic t-range.
RateFit fit_power(const NormCurve& curve, double window_fraction);

// Competes v ~ C t^a, v^2 ~ C log t + d, v^2 ~ C t + d by r^2 on the top
// decade; ties go to power.
std::pair<GrowthModel, RateFit> classify_growth(const NormCurve& curve);

PredictedLaw predicted_exponent(Quantity quantity, int n,
                                const DampingParams& params);

struct QuantityReport {
    Quantity quantity;
    PredictedLaw predicted;
    RateFit fitted;
    GrowthModel classified;
    double reported_exponent;  // exponent compared against predicted
    bool pass;
};

struct TheoremReport {
    std::vector<QuantityReport> rows;
    double gamma_hat;   // log-linear fit of the highfreq_u curve
    double gamma_ref;   // thresholds().gamma
    double highfreq_alpha;  // power fit of the same curve, should be << -10
    bool highfreq_pass;
    bool ordering_pass;  // residual_u decays strictly faster than profile_u (n >= 3)
    bool overall;
};

TheoremReport theorem_report(int n, const DampingParams& params,
                             const DatumSpec& datum,
                             const std::vector<double>& t_grid, double tol_exp,
                             int threads = 1);

}  // namespace logdamp
