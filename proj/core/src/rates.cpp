#include "logdamp/rates.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "logdamp/propagator.hpp"
#include "logdamp/quadrature.hpp"

namespace logdamp {

namespace {
constexpr double spectral_tol = 1e-9;
}

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::u_l2: return "u_l2";
        case Quantity::grad_l2: return "grad_l2";
        case Quantity::ut_l2: return "ut_l2";
        case Quantity::energy: return "energy";
        case Quantity::profile_u: return "profile_u";
        case Quantity::profile_ut: return "profile_ut";
        case Quantity::residual_u: return "residual_u";
        case Quantity::residual_ut: return "residual_ut";
        case Quantity::highfreq_u: return "highfreq_u";
        case Quantity::highfreq_ut: return "highfreq_ut";
    }
    throw std::logic_error("quantity_name: unreachable");
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
    for (Quantity q :
         {Quantity::u_l2, Quantity::grad_l2, Quantity::ut_l2, Quantity::energy,
          Quantity::profile_u, Quantity::profile_ut, Quantity::residual_u,
          Quantity::residual_ut, Quantity::highfreq_u, Quantity::highfreq_ut})
        if (quantity_name(q) == name) return q;
    return std::nullopt;
}

std::string model_name(GrowthModel m) {
    switch (m) {
        case GrowthModel::power: return "power";
        case GrowthModel::log_sqrt: return "log_sqrt";
        case GrowthModel::sqrt_t: return "sqrt_t";
    }
    throw std::logic_error("model_name: unreachable");
}

std::vector<double> geometric_grid(double t_min, double t_max, int points) {
    if (!(t_min > 0.0) || !(t_max > t_min) || points < 2)
        throw std::invalid_argument("geometric_grid: bad range");
    std::vector<double> g(points);
    const double l0 = std::log(t_min), l1 = std::log(t_max);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    return g;
}

namespace {

bool profile_only(Quantity q) {
    return q == Quantity::profile_u || q == Quantity::profile_ut;
}

double curve_value(Quantity q, const DatumSpec& datum, int n,
                   const DampingParams& params, double t, double tol,
                   double delta1) {
    const auto u_amp = [&](double r) {
        return std::abs(mode_solution(r, params, t, datum.fourier(r)).u);
    };
    const auto v_amp = [&](double r) {
        return std::abs(mode_solution(r, params, t, datum.fourier(r)).v);
    };
    switch (q) {
        case Quantity::u_l2:
            return spectral_l2(u_amp, n, t, tol);
        case Quantity::grad_l2:
            return spectral_l2([&](double r) { return r * u_amp(r); }, n, t,
                               tol);
        case Quantity::ut_l2:
            return spectral_l2(v_amp, n, t, tol);
        case Quantity::energy: {
            const double g =
                spectral_l2([&](double r) { return r * u_amp(r); }, n, t, tol);
            const double v = spectral_l2(v_amp, n, t, tol);
            return 0.5 * (g * g + v * v);
        }
        case Quantity::profile_u:
            return spectral_l2(
                [&](double r) {
                    return std::abs(profile(ProfileKind::displacement, r,
                                            params, t, datum.P1));
                },
                n, t, tol);
        case Quantity::profile_ut:
            return spectral_l2(
                [&](double r) {
                    return std::abs(
                        profile(ProfileKind::velocity, r, params, t, datum.P1));
                },
                n, t, tol);
        case Quantity::residual_u:
            return spectral_l2(
                [&](double r) {
                    return std::abs(residual(ProfileKind::displacement, r,
                                             params, t, datum.fourier(r),
                                             datum.P1));
                },
                n, t, tol);
        case Quantity::residual_ut:
            return spectral_l2(
                [&](double r) {
                    return std::abs(residual(ProfileKind::velocity, r, params,
                                             t, datum.fourier(r), datum.P1));
                },
                n, t, tol);
        case Quantity::highfreq_u:
            return spectral_l2(u_amp, n, t, tol, delta1);
        case Quantity::highfreq_ut:
            return spectral_l2(v_amp, n, t, tol, delta1);
    }
    throw std::logic_error("curve_value: unreachable");
}

struct LinFit {
    double slope, intercept, r2;
};

LinFit ols(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t m = x.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    double r2 = 1.0;
    if (syy > 0.0) {
        const double ssres = syy - sxy * sxy / sxx;
        r2 = std::max(0.0, 1.0 - ssres / syy);
    }
    return {slope, my - slope * mx, r2};
}

}  // namespace

NormCurve norm_curve(Quantity quantity, const DatumSpec& datum, int n,
                     const DampingParams& params,
                     const std::vector<double>& t_grid, double tol,
                     int threads) {
    if (t_grid.size() < 8)
        throw std::invalid_argument("norm_curve: need >= 8 grid points");
    for (size_t i = 0; i < t_grid.size(); ++i)
        if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
            throw std::invalid_argument(
                "norm_curve: t grid must be positive and increasing");
    if (!datum.in_l2 && !profile_only(quantity))
        throw std::invalid_argument(
            "norm_curve: datum not in L2, only profile quantities allowed");

    double delta1 = 0.0;
    if (quantity == Quantity::highfreq_u || quantity == Quantity::highfreq_ut)
        delta1 = thresholds(params).delta1;

    std::vector<double> values(t_grid.size());
    const int nthreads =
        std::max(1, std::min<int>(threads, static_cast<int>(t_grid.size())));
    auto work = [&](int offset) {
        for (size_t i = offset; i < t_grid.size(); i += nthreads)
            values[i] =
                curve_value(quantity, datum, n, params, t_grid[i], tol, delta1);
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k) pool.emplace_back(work, k);
        for (auto& th : pool) th.join();
    }
    return {quantity, t_grid, values, n, params.theta, datum.id()};
}

RateFit fit_power(const NormCurve& curve, double window_fraction) {
    if (!(window_fraction > 0.0) || window_fraction > 1.0)
        throw std::invalid_argument("fit_power: window_fraction in (0,1]");
    const double l1 = std::log(curve.t.back());
    const double cut =
        l1 - window_fraction * (l1 - std::log(curve.t.front()));
    std::vector<double> x, y;
    double lo = curve.t.back();
    for (size_t i = 0; i < curve.t.size(); ++i) {
        if (std::log(curve.t[i]) < cut - 1e-12) continue;
        if (!(curve.values[i] > 0.0))
            throw std::domain_error("fit_power: non-positive curve value");
        x.push_back(std::log(curve.t[i]));
        y.push_back(std::log(curve.values[i]));
        lo = std::min(lo, curve.t[i]);
    }
    if (x.size() < 5)
        throw std::invalid_argument("fit_power: fewer than 5 points in window");
    const LinFit f = ols(x, y);
    return {GrowthModel::power, f.slope, std::exp(f.intercept), f.r2, lo,
            curve.t.back()};
}

std::pair<GrowthModel, RateFit> classify_growth(const NormCurve& curve) {
    // top decade
    const double l1 = std::log(curve.t.back());
    const double cut = std::max(std::log(curve.t.front()),
                                l1 - std::log(10.0)) -
                       1e-12;
    std::vector<double> t, v;
    for (size_t i = 0; i < curve.t.size(); ++i) {
        if (std::log(curve.t[i]) < cut) continue;
        if (!(curve.values[i] > 0.0))
            throw std::domain_error("classify_growth: non-positive value");
        t.push_back(curve.t[i]);
        v.push_back(curve.values[i]);
    }
    if (t.size() < 5)
        throw std::invalid_argument("classify_growth: too few points");

    std::vector<double> lnt(t.size()), lnv(t.size()), v2(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        lnt[i] = std::log(t[i]);
        lnv[i] = std::log(v[i]);
        v2[i] = v[i] * v[i];
    }
    const LinFit fp = ols(lnt, lnv);
    const LinFit fl = ols(lnt, v2);  // v^2 ~ c log t + d
    const LinFit fs = ols(t, v2);    // v^2 ~ c t + d
    // growth models need positive slopes to make sense
    const double rl = fl.slope > 0.0 ? fl.r2 : -1.0;
    const double rs = fs.slope > 0.0 ? fs.r2 : -1.0;

    const double lo = t.front(), hi = t.back();
    if (fp.r2 >= rl && fp.r2 >= rs)
        return {GrowthModel::power,
                {GrowthModel::power, fp.slope, std::exp(fp.intercept), fp.r2,
                 lo, hi}};
    if (rl >= rs)
        return {GrowthModel::log_sqrt,
                {GrowthModel::log_sqrt, 0.0, fl.slope, fl.r2, lo, hi}};
    return {GrowthModel::sqrt_t,
            {GrowthModel::sqrt_t, 0.0, fs.slope, fs.r2, lo, hi}};
}

PredictedLaw predicted_exponent(Quantity quantity, int n,
                                const DampingParams& params) {
    params.require_supersonic();
    const double th = params.theta;
    const double four_th = 4.0 * th;
    switch (quantity) {
        case Quantity::u_l2:
        case Quantity::profile_u:
            if (n >= 3)
                return {GrowthModel::power, -(n - 2) / four_th, false};
            if (n == 2) return {GrowthModel::log_sqrt, 0.0, false};
            return {GrowthModel::sqrt_t, 0.0, false};
        case Quantity::grad_l2:
        case Quantity::ut_l2:
        case Quantity::energy:  // energy-norm sqrt(2E) convention
        case Quantity::profile_ut:
            return {GrowthModel::power, -n / four_th, false};
        case Quantity::residual_u:
            if (n == 1 && th < 0.625)
                return {GrowthModel::power, 1.0 / th - 1.5, true};
            return {GrowthModel::power,
                    (-n + std::max(6.0 - 8.0 * th, 0.0)) / four_th, true};
        case Quantity::residual_ut:
            if (th <= 1.0)
                return {GrowthModel::power, -(n + 4.0 * th - 2.0) / four_th,
                        true};
            return {GrowthModel::power, -(n + 2.0) / four_th, true};
        case Quantity::highfreq_u:
        case Quantity::highfreq_ut:
            throw std::invalid_argument(
                "predicted_exponent: highfreq decay is exponential, not a "
                "power law");
    }
    throw std::logic_error("predicted_exponent: unreachable");
}

TheoremReport theorem_report(int n, const DampingParams& params,
                             const DatumSpec& datum,
                             const std::vector<double>& t_grid, double tol_exp,
                             int threads) {
    TheoremReport rep;
    const Quantity rows[] = {Quantity::u_l2,       Quantity::grad_l2,
                             Quantity::ut_l2,      Quantity::energy,
                             Quantity::profile_u,  Quantity::profile_ut,
                             Quantity::residual_u, Quantity::residual_ut};
    double alpha_res_u = 0.0, alpha_prof_u = 0.0;
    for (Quantity q : rows) {
        const PredictedLaw pred = predicted_exponent(q, n, params);
        const NormCurve curve =
            norm_curve(q, datum, n, params, t_grid, spectral_tol, threads);
        QuantityReport row;
        row.quantity = q;
        row.predicted = pred;
        if (pred.model == GrowthModel::power) {
            row.fitted = fit_power(curve, 0.5);
            row.classified = GrowthModel::power;
            row.reported_exponent = q == Quantity::energy
                                        ? row.fitted.exponent / 2.0
                                        : row.fitted.exponent;
            row.pass = pred.one_sided
                           ? row.reported_exponent <= pred.exponent + tol_exp
                           : std::abs(row.reported_exponent - pred.exponent) <=
                                 tol_exp;
        } else {
            const auto [model, fit] = classify_growth(curve);
            row.fitted = fit;
            row.classified = model;
            row.reported_exponent =
                model == GrowthModel::power ? fit.exponent : 0.0;
            row.pass = model == pred.model;
        }
        if (q == Quantity::residual_u && n >= 3)
            alpha_res_u = fit_power(curve, 0.5).exponent;
        if (q == Quantity::profile_u && n >= 3)
            alpha_prof_u = fit_power(curve, 0.5).exponent;
        rep.rows.push_back(row);
    }
    rep.ordering_pass = n < 3 || alpha_res_u < alpha_prof_u - 0.1;

    // exponential zone: refit on a grid short enough to avoid underflow
    const Thresholds th = thresholds(params);
    rep.gamma_ref = th.gamma;
    const double t_lo = std::max(t_grid.front(), 10.0);
    const double t_hi =
        std::min(t_grid.back(), 300.0 / std::max(th.gamma, 1e-6));
    const auto sub = geometric_grid(t_lo, std::max(t_hi, 3.0 * t_lo), 12);
    const NormCurve hf = norm_curve(Quantity::highfreq_u, datum, n, params,
                                    sub, spectral_tol, threads);
    std::vector<double> x(hf.t.size()), y(hf.t.size());
    for (size_t i = 0; i < hf.t.size(); ++i) {
        x[i] = hf.t[i];
        y[i] = std::log(hf.values[i]);
    }
    rep.gamma_hat = -ols(x, y).slope;
    rep.highfreq_alpha = fit_power(hf, 1.0).exponent;
    rep.highfreq_pass = rep.gamma_hat >= 0.5 * th.gamma &&
                        rep.gamma_hat <= 2.0 * th.gamma &&
                        rep.highfreq_alpha < -10.0;

    rep.overall = rep.ordering_pass && rep.highfreq_pass;
    for (const auto& row : rep.rows) rep.overall = rep.overall && row.pass;
    return rep;
}

}  // namespace logdamp
