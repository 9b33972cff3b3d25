#include <doctest.h>

#include <cmath>

#include "logdamp/oracle.hpp"
#include "logdamp/propagator.hpp"
#include "logdamp/rates.hpp"

using namespace logdamp;

namespace {

NormCurve synthetic(const std::function<double(double)>& f) {
    NormCurve c;
    c.quantity = Quantity::u_l2;
    c.t = geometric_grid(10.0, 1e4, 24);
    for (double t : c.t) c.values.push_back(f(t));
    c.n = 3;
    c.theta = 1.0;
    c.datum_id = "synthetic";
    return c;
}

}  // namespace

TEST_CASE("geometric grid") {
    const auto g = geometric_grid(100.0, 1e5, 16);
    CHECK(g.size() == 16);
    CHECK(g.front() == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(g.back() == doctest::Approx(1e5).epsilon(1e-14));
    const double q = g[1] / g[0];
    for (size_t i = 2; i < g.size(); ++i)
        CHECK(g[i] / g[i - 1] == doctest::Approx(q).epsilon(1e-12));
    CHECK_THROWS_AS(geometric_grid(-1.0, 10.0, 8), std::invalid_argument);
}

TEST_CASE("power fit recovers synthetic laws") {
    const auto pure = synthetic([](double t) { return 3.0 * std::pow(t, -0.5); });
    const RateFit f = fit_power(pure, 1.0);
    CHECK(f.exponent == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(f.amplitude == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));

    const auto wobbly = synthetic(
        [](double t) { return (1.0 + 0.1 * std::sin(std::log(t))) / t; });
    CHECK(fit_power(wobbly, 1.0).exponent == doctest::Approx(-1.0).epsilon(0.05));

    const auto flat = synthetic([](double) { return 2.0; });
    CHECK(fit_power(flat, 1.0).exponent == doctest::Approx(0.0).epsilon(1e-12));

    const auto bad = synthetic([](double t) { return t < 100.0 ? -1.0 : 1.0; });
    CHECK_THROWS_AS(fit_power(bad, 1.0), std::domain_error);
}

TEST_CASE("growth classifier on synthetic data") {
    const auto power = synthetic([](double t) { return std::pow(t, -0.3); });
    CHECK(classify_growth(power).first == GrowthModel::power);
    const auto logc =
        synthetic([](double t) { return std::sqrt(2.0 * std::log(t) + 5.0); });
    CHECK(classify_growth(logc).first == GrowthModel::log_sqrt);
    const auto sq =
        synthetic([](double t) { return std::sqrt(0.7 * t + 40.0); });
    CHECK(classify_growth(sq).first == GrowthModel::sqrt_t);
}

TEST_CASE("predicted laws") {
    const DampingParams th1(1.0);
    CHECK(predicted_exponent(Quantity::u_l2, 3, th1).exponent ==
          doctest::Approx(-0.25));
    CHECK(predicted_exponent(Quantity::u_l2, 2, th1).model ==
          GrowthModel::log_sqrt);
    CHECK(predicted_exponent(Quantity::u_l2, 1, th1).model ==
          GrowthModel::sqrt_t);
    CHECK(predicted_exponent(Quantity::residual_ut, 3, th1).exponent ==
          doctest::Approx(-1.25));
    CHECK(predicted_exponent(Quantity::energy, 2, DampingParams(0.75)).exponent ==
          doctest::Approx(-2.0 / 3.0));
    CHECK(predicted_exponent(Quantity::residual_u, 1, DampingParams(0.55)).exponent ==
          doctest::Approx(1.0 / 0.55 - 1.5));
    // theta = 5/8 sits in the decay branch
    CHECK(predicted_exponent(Quantity::residual_u, 1, DampingParams(0.625)).exponent ==
          doctest::Approx(0.0));
    CHECK(predicted_exponent(Quantity::residual_u, 2, DampingParams(0.6)).exponent ==
          doctest::Approx((-2.0 + 1.2) / 2.4));
    CHECK_THROWS_AS(predicted_exponent(Quantity::u_l2, 3, DampingParams(0.5)),
                    std::domain_error);
    CHECK_THROWS_AS(predicted_exponent(Quantity::highfreq_u, 3, th1),
                    std::invalid_argument);
}

TEST_CASE("norm curve guards") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    CHECK_THROWS_AS(
        norm_curve(Quantity::u_l2, g, 3, p, {1.0, 2.0, 3.0}, 1e-9),
        std::invalid_argument);
    const DatumSpec d = catalog("delta_like", {{"p1", 1.0}}, 3);
    CHECK_THROWS_AS(norm_curve(Quantity::u_l2, d, 3, p,
                               geometric_grid(1.0, 100.0, 8), 1e-9),
                    std::invalid_argument);
    // profile quantities are allowed for the delta-like datum
    const auto c = norm_curve(Quantity::profile_u, d, 3, p,
                              geometric_grid(10.0, 1000.0, 8), 1e-9);
    CHECK(c.values.front() > 0.0);
}

TEST_CASE("energy curve starts at the datum energy and decreases") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    const auto grid = geometric_grid(1e-6, 1e2, 10);
    const auto c = norm_curve(Quantity::energy, g, 3, p, grid, 1e-10);
    CHECK(c.values.front() ==
          doctest::Approx(0.5 * g.norm_l2 * g.norm_l2).epsilon(1e-5));
    for (size_t i = 1; i < c.values.size(); ++i)
        CHECK(c.values[i] <= c.values[i - 1] * (1.0 + 1e-10));
}

TEST_CASE("energy splits into gradient and velocity parts") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    const auto grid = geometric_grid(1.0, 1e3, 8);
    const auto e = norm_curve(Quantity::energy, g, 3, p, grid, 1e-10);
    const auto gr = norm_curve(Quantity::grad_l2, g, 3, p, grid, 1e-10);
    const auto ut = norm_curve(Quantity::ut_l2, g, 3, p, grid, 1e-10);
    for (size_t i = 0; i < grid.size(); ++i) {
        const double sum =
            gr.values[i] * gr.values[i] + ut.values[i] * ut.values[i];
        CHECK(sum == doctest::Approx(2.0 * e.values[i]).epsilon(1e-10));
    }
}

TEST_CASE("linearity: doubling the datum doubles the curve") {
    const DampingParams p(1.0);
    const DatumSpec d1 = catalog("delta_like", {{"p1", 1.0}}, 3);
    const DatumSpec d2 = catalog("delta_like", {{"p1", 2.0}}, 3);
    const auto grid = geometric_grid(10.0, 1e3, 8);
    const auto c1 = norm_curve(Quantity::profile_u, d1, 3, p, grid, 1e-10);
    const auto c2 = norm_curve(Quantity::profile_u, d2, 3, p, grid, 1e-10);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(c2.values[i] == doctest::Approx(2.0 * c1.values[i]).epsilon(1e-12));
}

TEST_CASE("curve values match a brute-force spectral quadrature") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    const double t = 1e4;
    auto grid = geometric_grid(1e2, t, 8);
    const auto c = norm_curve(Quantity::u_l2, g, 3, p, grid, 1e-10);
    // fine fixed-grid trapezoid of omega_3 |u|^2 r^2 over the support
    const double rmax = 0.2;
    const double integral = brute_quadrature(
        [&](double r) {
            const auto s = mode_solution(r, p, t, g.fourier(r));
            return std::norm(s.u) * r * r;
        },
        0.0, rmax, 400000);
    const double ref =
        std::pow(2.0 * M_PI, -1.5) * std::sqrt(4.0 * M_PI * integral);
    CHECK(c.values.back() == doctest::Approx(ref).epsilon(1e-4));
}

TEST_CASE("threaded evaluation is identical to serial") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    const auto grid = geometric_grid(1e2, 1e4, 12);
    const auto serial = norm_curve(Quantity::residual_u, g, 3, p, grid, 1e-9, 1);
    const auto par = norm_curve(Quantity::residual_u, g, 3, p, grid, 1e-9, 8);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(serial.values[i] == par.values[i]);
}

TEST_CASE("full report for the reference configuration") {
    const DampingParams p(1.0);
    const DatumSpec g = catalog("gaussian", {{"sigma", 1.0}}, 3);
    const auto rep =
        theorem_report(3, p, g, geometric_grid(1e2, 1e5, 16), 0.05, 4);
    for (const auto& row : rep.rows) CHECK(row.pass);
    CHECK(rep.ordering_pass);
    CHECK(rep.highfreq_pass);
    CHECK(rep.overall);
    CHECK(rep.gamma_hat / rep.gamma_ref == doctest::Approx(1.0).epsilon(0.5));
    CHECK(rep.highfreq_alpha < -10.0);
}
