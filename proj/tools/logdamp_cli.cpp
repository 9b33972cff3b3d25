// Command-line front end: rate reports (JSON), norm curves (CSV), asymptotic
// limit tables, single-mode inspection, and the frequency thresholds.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "logdamp/data_models.hpp"
#include "logdamp/oracle.hpp"
#include "logdamp/propagator.hpp"
#include "logdamp/rates.hpp"
#include "logdamp/specfun.hpp"
#include "logdamp/symbols.hpp"

using nlohmann::json;
using namespace logdamp;

namespace {

// 12 significant digits, round-tripped so the JSON emitter prints a stable
// shortest representation across platforms
double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::stod(buf);
}

std::string sci12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

struct RunConfig {
    int n = 3;
    double theta = 1.0;
    std::string datum = "gaussian:sigma=1";
    std::string quantity = "u_l2";
    double t_min = 100.0;
    double t_max = 100000.0;
    int points = 16;
    double tol_exp = 0.05;
    std::string out;
    int threads = 1;
    // specfun / mode extras
    double mu = 1.0, x1 = 0.0, p = 2.0, eta = 1.0, r = 0.3, t = 20.0;
    std::string x2 = "inf";
};

void apply_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    json j = json::parse(in);
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("theta")) c.theta = j["theta"].get<double>();
    if (j.contains("datum")) c.datum = j["datum"].get<std::string>();
    if (j.contains("quantity")) c.quantity = j["quantity"].get<std::string>();
    if (j.contains("t-min")) c.t_min = j["t-min"].get<double>();
    if (j.contains("t-max")) c.t_max = j["t-max"].get<double>();
    if (j.contains("points")) c.points = j["points"].get<int>();
    if (j.contains("tol-exp")) c.tol_exp = j["tol-exp"].get<double>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
}

void write_text(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

void require_supersonic_cli(double theta) {
    if (!(theta > 0.5))
        throw CLI::ValidationError(
            "--theta",
            "the decay results assume theta > 1/2 (hypothesis of the rate "
            "theorems); got " +
                std::to_string(theta));
}

int cmd_report(const RunConfig& c) {
    require_supersonic_cli(c.theta);
    const DampingParams params(c.theta);
    const DatumSpec datum = parse_datum(c.datum, c.n);
    const auto grid = geometric_grid(c.t_min, c.t_max, c.points);
    const TheoremReport rep =
        theorem_report(c.n, params, datum, grid, c.tol_exp, c.threads);

    json j;
    j["schema"] = "logdamp-report/1";
    j["config"] = {{"n", c.n},
                   {"theta", round12(c.theta)},
                   {"datum", datum.id()},
                   {"t-min", round12(c.t_min)},
                   {"t-max", round12(c.t_max)},
                   {"points", c.points},
                   {"tol-exp", round12(c.tol_exp)}};
    json rows = json::object();
    for (const auto& row : rep.rows) {
        json r;
        r["model"] = model_name(row.classified);
        r["predicted-model"] = model_name(row.predicted.model);
        if (row.predicted.model == GrowthModel::power) {
            r["predicted"] = round12(row.predicted.exponent);
            r["fitted"] = round12(row.reported_exponent);
        }
        r["r2"] = round12(row.fitted.r2);
        r["pass"] = row.pass;
        rows[quantity_name(row.quantity)] = r;
    }
    j["quantities"] = rows;
    j["highfreq"] = {{"gamma-hat", round12(rep.gamma_hat)},
                     {"gamma-ref", round12(rep.gamma_ref)},
                     {"alpha", round12(rep.highfreq_alpha)},
                     {"pass", rep.highfreq_pass}};
    j["ordering-pass"] = rep.ordering_pass;
    j["overall-pass"] = rep.overall;
    write_text(c.out, j.dump(2) + "\n");
    return rep.overall ? 0 : 1;
}

int cmd_curve(const RunConfig& c) {
    require_supersonic_cli(c.theta);
    const DampingParams params(c.theta);
    const DatumSpec datum = parse_datum(c.datum, c.n);
    const auto q = quantity_from_name(c.quantity);
    if (!q)
        throw CLI::ValidationError("--quantity",
                                   "unknown quantity " + c.quantity);
    const auto grid = geometric_grid(c.t_min, c.t_max, c.points);
    const NormCurve curve =
        norm_curve(*q, datum, c.n, params, grid, 1e-9, c.threads);
    std::ostringstream os;
    os << "t,value,quantity,n,theta,datum\n";
    for (size_t i = 0; i < curve.t.size(); ++i)
        os << sci12(curve.t[i]) << "," << sci12(curve.values[i]) << ","
           << quantity_name(*q) << "," << c.n << "," << round12(c.theta) << ","
           << datum.id() << "\n";
    write_text(c.out, os.str());
    return 0;
}

int cmd_specfun(const RunConfig& c) {
    const double x2 = c.x2 == "inf"
                          ? std::numeric_limits<double>::infinity()
                          : std::stod(c.x2);
    std::ostringstream os;
    os << "statement,t,lhs,limit,relerr\n";
    double final_left = 0, final_interior = 0, final_cleft = 0, final_cint = 0;
    for (double e = 2.0; e <= 4.01; e += 0.5) {
        const double t = std::pow(10.0, e);
        const auto a = check_beta_left(c.mu, x2, t);
        os << "beta-left," << sci12(a.t) << "," << sci12(a.lhs) << ","
           << sci12(a.limit) << "," << sci12(a.relerr) << "\n";
        final_left = a.relerr;
        if (c.x1 > 0.0) {
            const auto b = check_beta_interior(c.mu, c.x1, x2, t);
            os << "beta-interior," << sci12(b.t) << "," << sci12(b.lhs) << ","
               << sci12(b.limit) << "," << sci12(b.relerr) << "\n";
            final_interior = b.relerr;
        }
        const auto d = check_radial_left(c.p, c.theta, x2, t);
        os << "radial-left," << sci12(d.t) << "," << sci12(d.lhs) << ","
           << sci12(d.limit) << "," << sci12(d.relerr) << "\n";
        final_cleft = d.relerr;
        const auto f = check_radial_interior(
            c.eta, c.p, c.theta, std::numeric_limits<double>::infinity(), t);
        os << "radial-interior," << sci12(f.t) << "," << sci12(f.lhs) << ","
           << sci12(f.limit) << "," << sci12(f.relerr) << "\n";
        final_cint = f.relerr;
    }
    write_text(c.out, os.str());
    const double tol = c.tol_exp;
    return (final_left < tol && final_interior < tol && final_cleft < tol &&
            final_cint < tol)
               ? 0
               : 1;
}

int cmd_mode(const RunConfig& c) {
    const DampingParams params(c.theta);
    const ModeState closed = mode_solution(c.r, params, c.t, 1.0);
    std::complex<double> ou, ov;
    if (c.t <= 100.0) {
        const double lam = std::max(std::abs(roots(c.r, params).first),
                                    std::abs(roots(c.r, params).second));
        const double dt = std::min(1e-4, 0.05 / std::max(lam, 1.0));
        const OdeRun run = rk4_mode(c.r, params, c.t, dt, 1.0);
        ou = run.u_final();
        ov = run.v_final();
    } else {
        ou = closed.u;
        ov = closed.v;
    }
    const auto rel = [](std::complex<double> a, std::complex<double> b) {
        const double den = std::max(std::abs(b), 1e-300);
        return std::abs(a - b) / den;
    };
    const char* branch = "complex";
    switch (symbol_eval(c.r, params).branch) {
        case RootBranch::double_root: branch = "double"; break;
        case RootBranch::real_pair: branch = "real"; break;
        default: break;
    }
    std::ostringstream os;
    os << "field,closed_form,oracle,reldiff\n";
    os << "u," << sci12(closed.u.real()) << "," << sci12(ou.real()) << ","
       << sci12(rel(closed.u, ou)) << "\n";
    os << "v," << sci12(closed.v.real()) << "," << sci12(ov.real()) << ","
       << sci12(rel(closed.v, ov)) << "\n";
    os << "branch," << branch << "," << branch << ",0\n";
    write_text(c.out, os.str());
    return (rel(closed.u, ou) < 1e-5 && rel(closed.v, ov) < 1e-5) ? 0 : 1;
}

int cmd_thresholds(const RunConfig& c) {
    require_supersonic_cli(c.theta);
    const Thresholds th = thresholds(DampingParams(c.theta));
    json j;
    j["schema"] = "logdamp-report/1";
    j["theta"] = round12(c.theta);
    j["delta0"] = round12(th.delta0);
    j["delta1"] = round12(th.delta1);
    j["B"] = round12(th.B);
    j["gamma"] = round12(th.gamma);
    write_text(c.out, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // config file values are loaded first so explicit flags override them
    for (int i = 1; i < argc - 1; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(cfg, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"numerical laboratory for the log-damped wave equation"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "space dimension");
        sub->add_option("--theta", cfg.theta, "damping exponent");
        sub->add_option("--datum", cfg.datum, "initial datum, name:key=value,...");
        sub->add_option("--t-min", cfg.t_min);
        sub->add_option("--t-max", cfg.t_max);
        sub->add_option("--points", cfg.points);
        sub->add_option("--tol-exp", cfg.tol_exp, "exponent tolerance");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--threads", cfg.threads);
        sub->add_option("--config", config_path,
                        "JSON config file (flags override)");
    };

    CLI::App* report = app.add_subcommand("report", "JSON rate report");
    add_common(report);
    CLI::App* curve = app.add_subcommand("curve", "CSV norm-vs-time curve");
    add_common(curve);
    curve->add_option("--quantity", cfg.quantity);
    CLI::App* specfun =
        app.add_subcommand("specfun", "asymptotic limit tables (CSV)");
    add_common(specfun);
    specfun->add_option("--mu", cfg.mu);
    specfun->add_option("--x1", cfg.x1);
    specfun->add_option("--x2", cfg.x2, "number or 'inf'");
    specfun->add_option("--p", cfg.p);
    specfun->add_option("--eta", cfg.eta);
    CLI::App* mode =
        app.add_subcommand("mode", "single mode vs the RK4 oracle");
    add_common(mode);
    mode->add_option("--r", cfg.r, "radial frequency");
    mode->add_option("--t", cfg.t, "evaluation time");
    CLI::App* thres =
        app.add_subcommand("thresholds", "frequency thresholds (JSON)");
    add_common(thres);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return cmd_report(cfg);
        if (curve->parsed()) return cmd_curve(cfg);
        if (specfun->parsed()) return cmd_specfun(cfg);
        if (mode->parsed()) return cmd_mode(cfg);
        if (thres->parsed()) return cmd_thresholds(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
