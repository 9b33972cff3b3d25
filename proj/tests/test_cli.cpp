#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LOGDAMP_CLI_PATH
#error "LOGDAMP_CLI_PATH must point at the CLI binary"
#endif

namespace {

const std::string cli = LOGDAMP_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("exit code contract") {
    CHECK(run("thresholds --theta 1") == 0);
    CHECK(run("report --theta 0.4 --n 3") == 2);  // hypothesis violated
    CHECK(run("curve --quantity no_such --n 3 --theta 1") == 2);
    CHECK(run("curve --datum tent:h=1 --n 3 --theta 1 --quantity u_l2") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("mode --r 0 --t 5 --theta 1") == 0);
}

TEST_CASE("curve CSV shape") {
    const std::string out = "/tmp/logdamp_curve_test.csv";
    REQUIRE(run("curve --n 3 --theta 1 --datum gaussian:sigma=1 "
                "--quantity u_l2 --t-min 100 --t-max 1000 --points 16 --out " +
                out) == 0);
    std::ifstream f(out);
    std::string line;
    REQUIRE(std::getline(f, line));
    CHECK(line == "t,value,quantity,n,theta,datum");
    int rows = 0;
    while (std::getline(f, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 16);
}

TEST_CASE("outputs are byte-identical across thread counts") {
    const std::string a = "/tmp/logdamp_det_a", b = "/tmp/logdamp_det_b";
    const std::string common =
        " --n 3 --theta 1 --datum gaussian:sigma=1 --t-min 100 --t-max 10000 "
        "--points 12 ";
    REQUIRE(run("curve --quantity residual_u" + common +
                "--threads 1 --out " + a + ".csv") == 0);
    REQUIRE(run("curve --quantity residual_u" + common +
                "--threads 8 --out " + b + ".csv") == 0);
    CHECK(slurp(a + ".csv") == slurp(b + ".csv"));
    REQUIRE(run("report" + common + "--threads 1 --out " + a + ".json") == 0);
    REQUIRE(run("report" + common + "--threads 8 --out " + b + ".json") == 0);
    CHECK(slurp(a + ".json") == slurp(b + ".json"));
}

TEST_CASE("report JSON carries the schema and the n = 1 classification") {
    const std::string out = "/tmp/logdamp_report_n1.json";
    CHECK(run("report --n 1 --theta 1 --datum gaussian:sigma=1 --out " + out) ==
          0);
    const std::string text = slurp(out);
    CHECK(text.find("\"schema\": \"logdamp-report/1\"") != std::string::npos);
    const auto upos = text.find("\"u_l2\"");
    REQUIRE(upos != std::string::npos);
    CHECK(text.find("\"model\": \"sqrt_t\"", upos) != std::string::npos);
}

TEST_CASE("config file feeds defaults, flags override") {
    const std::string cfgpath = "/tmp/logdamp_cfg.json";
    {
        std::ofstream cfg(cfgpath);
        cfg << R"({"n": 1, "theta": 1.0, "datum": "box:h=1", "quantity": "u_l2",)"
            << R"( "t-min": 100, "t-max": 1000, "points": 16})" << "\n";
    }
    const std::string a = "/tmp/logdamp_cfg_a.csv", b = "/tmp/logdamp_cfg_b.csv";
    REQUIRE(run("curve --config " + cfgpath + " --out " + a) == 0);
    CHECK(slurp(a).find("box:h=1") != std::string::npos);
    REQUIRE(run("curve --config " + cfgpath + " --points 9 --out " + b) == 0);
    int rows = 0;
    std::istringstream is(slurp(b));
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 9);
}

TEST_CASE("specfun table converges") {
    const std::string out = "/tmp/logdamp_specfun.csv";
    CHECK(run("specfun --mu 1 --p 2 --eta 1 --theta 1 --tol-exp 0.01 --out " +
              out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("statement,t,lhs,limit,relerr") == 0);
    CHECK(text.find("radial-left") != std::string::npos);
}
