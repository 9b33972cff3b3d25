#include "logdamp/data_models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "logdamp/quadrature.hpp"

namespace logdamp {

namespace {

double require_positive(const std::map<std::string, double>& p,
                        const std::string& key, const std::string& who) {
    const auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument(who + ": missing parameter '" + key + "'");
    if (!(it->second > 0.0))
        throw std::domain_error(who + ": parameter '" + key +
                                "' must be positive");
    return it->second;
}

DatumSpec make_gaussian(double sigma, int n) {
    // u1(x) = exp(-|x|^2 / (2 sigma^2))
    DatumSpec d;
    d.name = "gaussian";
    d.params = {{"sigma", sigma}};
    d.n = n;
    const double s2 = sigma * sigma;
    d.P1 = std::pow(2.0 * M_PI * s2, n / 2.0);
    d.fourier = [s2, P1 = d.P1](double r) {
        return P1 * std::exp(-s2 * r * r / 2.0);
    };
    d.norm_l1 = d.P1;
    d.abs_moment = [s2, n](double kappa) {
        return sphere_area(n) * 0.5 * std::pow(2.0 * s2, (kappa + n) / 2.0) *
               std::tgamma((kappa + n) / 2.0);
    };
    d.norm_11 = d.norm_l1 + d.abs_moment(1.0);
    d.norm_l2 = std::pow(M_PI * s2, n / 4.0);
    d.I0 = d.norm_11 + d.norm_l2;
    d.in_l2 = true;
    return d;
}

DatumSpec make_box(double h) {
    // u1 = indicator of [-h, h], n = 1
    DatumSpec d;
    d.name = "box";
    d.params = {{"h", h}};
    d.n = 1;
    d.P1 = 2.0 * h;
    d.fourier = [h](double r) {
        const double x = h * r;
        if (std::abs(x) < 1e-4)
            return 2.0 * h * (1.0 - x * x / 6.0 + x * x * x * x / 120.0);
        return 2.0 * std::sin(x) / r;
    };
    d.norm_l1 = 2.0 * h;
    d.abs_moment = [h](double kappa) {
        return 2.0 * std::pow(h, kappa + 1.0) / (kappa + 1.0);
    };
    d.norm_11 = 2.0 * h + h * h;
    d.norm_l2 = std::sqrt(2.0 * h);
    d.I0 = d.norm_11 + d.norm_l2;
    d.in_l2 = true;
    return d;
}

DatumSpec make_ball(double h) {
    // u1 = indicator of the ball |x| <= h, n = 3
    DatumSpec d;
    d.name = "ball";
    d.params = {{"h", h}};
    d.n = 3;
    d.P1 = 4.0 * M_PI * h * h * h / 3.0;
    d.fourier = [h](double r) {
        const double x = h * r;
        if (std::abs(x) < 1e-2) {
            const double x2 = x * x;
            return 4.0 * M_PI * h * h * h *
                   (1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0);
        }
        return 4.0 * M_PI * (std::sin(x) - x * std::cos(x)) / (r * r * r);
    };
    d.norm_l1 = d.P1;
    d.abs_moment = [h](double kappa) {
        return 4.0 * M_PI * std::pow(h, kappa + 3.0) / (kappa + 3.0);
    };
    d.norm_11 = d.P1 + M_PI * h * h * h * h;
    d.norm_l2 = std::sqrt(d.P1);
    d.I0 = d.norm_11 + d.norm_l2;
    d.in_l2 = true;
    return d;
}

DatumSpec make_delta_like(double p1, int n) {
    DatumSpec d;
    d.name = "delta_like";
    d.params = {{"p1", p1}};
    d.n = n;
    d.P1 = p1;
    d.fourier = [p1](double) { return p1; };
    d.norm_l1 = p1;
    d.abs_moment = [](double) { return 0.0; };
    d.norm_11 = p1;
    d.norm_l2 = 0.0;  // not in L2; flagged below
    d.I0 = p1;
    d.in_l2 = false;
    return d;
}

}  // namespace

std::string DatumSpec::id() const {
    std::ostringstream os;
    os << name << ":";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ",";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

DatumSpec catalog(const std::string& name,
                  const std::map<std::string, double>& params, int n) {
    if (n < 1) throw std::invalid_argument("catalog: n >= 1");
    if (name == "gaussian")
        return make_gaussian(require_positive(params, "sigma", "gaussian"), n);
    if (name == "box") {
        if (n != 1) throw std::invalid_argument("catalog: box needs n = 1");
        return make_box(require_positive(params, "h", "box"));
    }
    if (name == "ball") {
        if (n != 3) throw std::invalid_argument("catalog: ball needs n = 3");
        return make_ball(require_positive(params, "h", "ball"));
    }
    if (name == "delta_like")
        return make_delta_like(require_positive(params, "p1", "delta_like"), n);
    throw std::invalid_argument("catalog: unknown datum '" + name + "'");
}

DatumSpec parse_datum(const std::string& text, int n) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::map<std::string, double> params;
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string kv;
        while (std::getline(rest, kv, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("parse_datum: expected key=value, got '" +
                                            kv + "'");
            size_t used = 0;
            const double val = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1)
                throw std::invalid_argument("parse_datum: bad number in '" + kv +
                                            "'");
            params[kv.substr(0, eq)] = val;
        }
    }
    return catalog(name, params, n);
}

Decomposition decompose(const DatumSpec& datum, double xi_r) {
    // the transform is real for radial real data, so B1 = 0
    return {datum.P1, datum.fourier(xi_r) - datum.P1, 0.0};
}

std::pair<double, double> moment_bound_constants(
    const DatumSpec& datum, double kappa, const std::vector<double>& r_grid) {
    if (kappa < 0.0 || kappa > 1.0)
        throw std::domain_error("moment_bound_constants: kappa in [0,1]");
    const double norm_1k = datum.norm_l1 + datum.abs_moment(kappa);
    if (!std::isfinite(norm_1k) || norm_1k <= 0.0)
        throw std::domain_error("moment_bound_constants: infinite moment");
    double K = 0.0, M = 0.0;
    for (double r : r_grid) {
        if (!(r > 0.0)) continue;
        const Decomposition dec = decompose(datum, r);
        const double denom = std::pow(r, kappa) * norm_1k;
        K = std::max(K, std::abs(dec.A1) / denom);
        M = std::max(M, std::abs(dec.B1) / denom);
    }
    return {K, M};
}

}  // namespace logdamp
