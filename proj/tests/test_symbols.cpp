#include <doctest.h>

#include <cmath>
#include <random>

#include "logdamp/symbols.hpp"

using namespace logdamp;

TEST_CASE("log_symbol closed forms and domain") {
    const DampingParams th1(1.0);
    CHECK(log_symbol(0.0, th1) == 0.0);
    CHECK(log_symbol(1.0, DampingParams(0.5)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_symbol(-1.0, th1), std::domain_error);
    CHECK_THROWS_AS(DampingParams(0.0), std::domain_error);
}

TEST_CASE("damping symbol stays below the fractional symbol") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ur(0.0, 8.0), uth(0.1, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = std::exp(ur(rng)) - 1.0;
        const DampingParams p(uth(rng));
        const double L = log_symbol(r, p);
        CHECK(L >= 0.0);
        CHECK(L <= std::pow(r, 2.0 * p.theta) * (1.0 + 1e-14) + 1e-300);
    }
}

TEST_CASE("log_symbol and a are strictly increasing") {
    for (double theta : {0.6, 1.0, 3.0}) {
        const DampingParams p(theta);
        double prev = -1.0;
        for (double lr = -6.0; lr <= 4.0; lr += 0.05) {
            const double L = log_symbol(std::exp(lr), p);
            CHECK(L > prev);
            prev = L;
        }
    }
}

TEST_CASE("discriminant closed forms") {
    const DampingParams p(1.0);
    CHECK(discriminant(0.0, p) == 0.0);
    CHECK(discriminant(1.0, p) ==
          doctest::Approx(4.0 - std::log(2.0) * std::log(2.0)).epsilon(1e-15));
    const DampingParams p06(0.6);
    const double d0 = thresholds(p06).delta0;
    for (double r = d0 / 64; r <= d0; r += d0 / 64)
        CHECK(discriminant(r, p06) > 0.0);
}

TEST_CASE("roots: closed form, ordering, Vieta") {
    const DampingParams p(1.0);
    {
        const auto [lp, lm] = roots(0.0, p);
        CHECK(lp == std::complex<double>(0.0, 0.0));
        CHECK(lm == std::complex<double>(0.0, 0.0));
    }
    {
        const auto [lp, lm] = roots(1.0, p);
        const double l2 = std::log(2.0);
        CHECK(lp.real() == doctest::Approx(-l2 / 2).epsilon(1e-14));
        CHECK(lp.imag() ==
              doctest::Approx(0.5 * std::sqrt(4.0 - l2 * l2)).epsilon(1e-14));
    }
    for (double theta : {0.6, 1.0, 3.0}) {
        const DampingParams q(theta);
        for (double lr = std::log(1e-8); lr <= std::log(1e8); lr += 0.37) {
            const double r = std::exp(lr);
            const auto [lp, lm] = roots(r, q);
            const double L = log_symbol(r, q);
            CHECK(std::abs(lp + lm + L) <= 1e-12 * L);
            // the double-root snap moves the product by at most |disc|/4
            const double snap = 2.5e-11 * std::max(1.0, 4.0 * r * r);
            CHECK(std::abs(lp * lm - r * r) <= 1e-12 * r * r + snap);
            CHECK(lp.real() >= lm.real());
            CHECK(lp.real() < 0.0);
        }
    }
}

TEST_CASE("ab on the complex branch") {
    const DampingParams p(1.0);
    const auto [a, b] = ab(1.0, p);
    const double l2 = std::log(2.0);
    CHECK(a == doctest::Approx(l2 / 2).epsilon(1e-15));
    CHECK(b == doctest::Approx(0.5 * std::sqrt(4.0 - l2 * l2)).epsilon(1e-15));
    // b/r -> 1 at low frequency
    // stay above the double-root snap region (|disc| < 1e-10)
    double prev_gap = 1.0;
    for (double r = 1e-1; r >= 1e-4; r /= 10.0) {
        const double gap = std::abs(ab(r, p).second / r - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    // theta = 3 has a real band around r = 4
    const DampingParams p3(3.0);
    REQUIRE(discriminant(4.0, p3) < 0.0);
    CHECK_THROWS_AS(ab(4.0, p3), std::domain_error);
    // a/b <= 1 past B
    const double B = thresholds(p3).B;
    for (double r = B; r < B + 50.0; r += 0.5) {
        const auto [aa, bb] = ab(r, p3);
        CHECK(aa / bb <= 1.0 + 1e-12);
    }
}

TEST_CASE("g and h limits and the (b-r)/b identity") {
    const DampingParams p(1.0);
    CHECK(g_h(1e-7, p).first < 1e-10);
    CHECK(std::abs(g_h(1e-7, p).second) == doctest::Approx(0.5).epsilon(1e-6));
    // g ~ r^{4 theta - 2}/4 at low frequency; theta = 3/4 gives g/r -> 1/4
    const DampingParams p34(0.75);
    for (double r = 1e-4; r > 1e-7; r /= 4.0) {
        const double g = g_h(r, p34).first;
        CHECK(g / r == doctest::Approx(0.25).epsilon(1e-3));
    }
    for (double theta : {0.6, 1.0, 3.0}) {
        const DampingParams q(theta);
        for (double lr = std::log(1e-4); lr <= std::log(10.0); lr += 0.21) {
            const double r = std::exp(lr);
            if (symbol_eval(r, q).branch != RootBranch::complex_pair) continue;
            const auto [g, h] = g_h(r, q);
            const double b = ab(r, q).second;
            CHECK((b - r) / b == doctest::Approx(g * h).epsilon(1e-12));
        }
    }
    const DampingParams p3(3.0);
    CHECK_THROWS_AS(g_h(4.0, p3), std::domain_error);  // g >= 1 there
}

TEST_CASE("thresholds define their regions") {
    for (double theta : {0.6, 1.0, 2.0, 3.0}) {
        const DampingParams p(theta);
        const Thresholds th = thresholds(p);
        CHECK(th.delta0 > 0.0);
        CHECK(th.delta0 <= 1.0);
        CHECK(th.delta1 > 0.0);
        CHECK(th.delta1 <= th.delta0);
        CHECK(th.B >= 1.0);
        CHECK(th.gamma > 0.0);
        for (int i = 1; i <= 400; ++i) {
            const double r0 = th.delta0 * i / 400.0;
            CHECK(g_h(r0, p).first <= 0.5 + 1e-9);
            const double r1 = th.delta1 * i / 400.0;
            const auto [g, h] = g_h(r1, p);
            CHECK(std::abs(g * h) <=
                  std::pow(r1, 4.0 * theta - 2.0) * (1.0 + 1e-8));
        }
        for (double r = th.B; r < th.B + 40.0; r += 0.1) {
            CHECK(log_symbol(r, p) <= r * (1.0 + 1e-12));
            CHECK(discriminant(r, p) >= 2.0 * r * r * (1.0 - 1e-12));
        }
        // gamma really is the floor of Re(-lambda_+) past delta1
        for (double lr = std::log(th.delta1); lr < std::log(th.delta1) + 6.0;
             lr += 0.01)
            CHECK(-roots(std::exp(lr), p).first.real() >=
                  th.gamma * (1.0 - 1e-9));
    }
}

TEST_CASE("thresholds: theta = 3 has a genuine L = r crossing") {
    const DampingParams p(3.0);
    const Thresholds th = thresholds(p);
    CHECK(th.B > 1.0);
    CHECK(log_symbol(th.B, p) == doctest::Approx(th.B).epsilon(1e-8));
}

TEST_CASE("thresholds reject subsonic damping") {
    CHECK_THROWS_AS(thresholds(DampingParams(0.4)), std::domain_error);
    CHECK_THROWS_AS(thresholds(DampingParams(0.5)), std::domain_error);
}

TEST_CASE("branch continuity across the real band (theta = 3)") {
    const DampingParams p(3.0);
    // locate a complex -> real transition
    double lo = 1.0, hi = 4.0;
    REQUIRE(discriminant(lo, p) > 0.0);
    REQUIRE(discriminant(hi, p) < 0.0);
    while (hi - lo > 1e-12) {
        const double m = 0.5 * (lo + hi);
        (discriminant(m, p) > 0.0 ? lo : hi) = m;
    }
    const double dr = 1e-9;
    const auto a = roots(lo - dr, p), b = roots(hi + dr, p);
    CHECK(std::abs(a.first - b.first) < 1e-4);
    CHECK(std::abs(a.second - b.second) < 1e-4);
}
