#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using otto::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& name) { return slurp(fs::path(OTTO_GOLDEN_DIR) / name); }

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("otto_cli_test_" + name); }

const std::vector<std::string> kLargeCycle{"cycle", "--lambda-cold", "9.8", "--lambda-hot", "10",
                                           "--t-hot", "1",  "--t-cold",      "0.1"};

}  // namespace

TEST_CASE("golden outputs") {
    CHECK(call({"spectrum", "--lambda", "0", "--levels", "5"}).out == golden("spectrum_flat.csv"));
    CHECK(call({"spectrum", "--lambda", "1", "--levels", "4", "--precision", "10"}).out ==
          golden("spectrum_lambda1.csv"));
    CHECK(call({"sweep", "--axis", "lambda_hot:0.1:1:4", "--fixed", "lambda_cold=0.1", "--fixed", "t_hot=1",
                "--fixed", "t_cold=0.1", "--quantity", "work,mode", "--precision", "10"})
              .out == golden("sweep_small.csv"));
    auto args = kLargeCycle;
    args.insert(args.end(), {"--precision", "10"});
    CHECK(call(args).out == golden("cycle_large.json"));
}

TEST_CASE("cycle output") {
    const auto r = call(kLargeCycle);
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "engine");
    CHECK(j["efficiency"].get<double>() == doctest::Approx(0.0197).epsilon(0.01));

    const auto flat = call({"cycle", "--lambda-cold", "2", "--lambda-hot", "2", "--t-hot", "1", "--t-cold", "0.1"});
    const auto jf = nlohmann::json::parse(flat.out);
    CHECK(jf["mode"] == "dissipator");
    CHECK(std::abs(jf["work"].get<double>()) <= 1e-12);
    CHECK(jf["efficiency"].is_null());

    auto csv = kLargeCycle;
    csv.insert(csv.begin(), {"--format", "csv"});
    const auto rc = call(csv);
    CHECK(rc.out.rfind("q_hot,q_cold_out,work,efficiency,cop,mode,n_levels\n", 0) == 0);
}

TEST_CASE("tabular subcommands") {
    const auto fig = call({"figure", "fig11", "--threads", "2"});
    REQUIRE(fig.code == 0);
    std::istringstream lines(fig.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lambda_hot,q_hot,q_cold_out,work,mode,status");
    double prev_l = 0, prev_q = 0;
    int rows = 0, flips = 0;
    while (std::getline(lines, line)) {
        ++rows;
        const double l = std::stod(line.substr(0, line.find(',')));
        const double q = std::stod(line.substr(line.find(',') + 1));
        if (rows > 1 && prev_q > 0 && q <= 0) {
            ++flips;
            CHECK(prev_l >= 7.0);
            CHECK(l <= 7.5);
        }
        prev_l = l;
        prev_q = q;
    }
    CHECK(rows == 200);
    CHECK(flips == 1);

    const auto js = call({"--format", "json", "sweep", "--axis", "lambda_cold=0.1,0.5", "--axis",
                          "lambda_hot:0.1:2:5", "--fixed", "t_hot=1", "--fixed", "t_cold=0.1", "--quantity",
                          "efficiency"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["rows"].size() == 10);
    CHECK(j["rows"][0][2].is_null());  // equal curvatures: no efficiency
    CHECK(j["provenance"]["axes"].size() == 2);
}

TEST_CASE("limits and searches") {
    const auto s = call({"limits", "small", "--lambda", "0.011", "--epsilon", "0.001", "--theta", "0.05", "--t-ref",
                         "0.5"});
    REQUIRE(s.code == 0);
    const auto js = nlohmann::json::parse(s.out);
    CHECK(js["eta_s"].get<double>() == doctest::Approx(0.0014943).epsilon(1e-3));
    CHECK(js["exact_efficiency"].get<double>() == doctest::Approx(0.001314).epsilon(0.01));

    const auto l = call({"limits", "large", "--lambda", "10", "--epsilon", "0.2", "--t-hot", "1", "--t-cold", "0.1"});
    CHECK(nlohmann::json::parse(l.out)["eta_l"].get<double>() == 0.02);

    const auto t = call({"transition", "--lambda-cold", "0.1", "--t-hot", "1", "--t-cold", "0.1", "--lo", "5",
                         "--hi", "10"});
    REQUIRE(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["lambda_hot"].get<double>() == doctest::Approx(7.2514).epsilon(1e-4));

    const auto p = call({"peak", "--lambda-cold", "0.1", "--t-hot", "1", "--t-cold", "0.1", "--lo", "0.1", "--hi",
                         "7"});
    REQUIRE(p.code == 0);
    const auto jp = nlohmann::json::parse(p.out);
    CHECK(jp["unimodal"] == true);
    CHECK(jp["lambda_hot_at_peak"].get<double>() == doctest::Approx(0.875).epsilon(0.02));
}

TEST_CASE("exit codes and stream discipline") {
    auto bad = call({"cycle", "--lambda-cold", "-1", "--lambda-hot", "10", "--t-hot", "1", "--t-cold", "0.1"});
    CHECK(bad.code == otto::cli::kArgumentError);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    CHECK(call({"cycle", "--lambda-cold", "1"}).code == otto::cli::kArgumentError);
    CHECK(call({"--bogus"}).code == otto::cli::kArgumentError);
    CHECK(call({"figure", "fig3"}).code == otto::cli::kArgumentError);
    CHECK(call({"--precision", "18", "spectrum"}).code == otto::cli::kArgumentError);
    CHECK(call({"sweep", "--axis", "lambda_hot:1:2", "--quantity", "work"}).code == otto::cli::kArgumentError);
    CHECK(call({"cycle", "--lambda-cold", "1", "--lambda-hot", "2", "--t-hot", "0.1", "--t-cold", "1"}).code ==
          otto::cli::kArgumentError);

    auto br = call({"transition", "--lambda-cold", "0.1", "--t-hot", "1", "--t-cold", "0.1", "--lo", "1", "--hi", "2"});
    CHECK(br.code == otto::cli::kBracketError);
    CHECK(br.out.empty());

    auto tr = call({"--n-max", "5", "cycle", "--lambda-cold", "0", "--lambda-hot", "0.01", "--t-hot", "50",
                    "--t-cold", "0.1"});
    CHECK(tr.code == otto::cli::kNumericalError);
    CHECK(tr.out.empty());
    CHECK(tr.err.find("truncation") != std::string::npos);

    const auto help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
    const auto path = temp_path("out.csv");
    fs::remove(path);
    const auto r = call({"--out", path.string(), "spectrum", "--lambda", "0", "--levels", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == golden("spectrum_flat.csv"));
    fs::remove(path);

    // failed runs do not create the file
    call({"--out", path.string(), "figure", "fig3"});
    CHECK_FALSE(fs::exists(path));
}

TEST_CASE("config file and environment") {
    const auto cfg = temp_path("run.ini");
    {
        std::ofstream f(cfg);
        f << "precision = 10\n[cycle]\nlambda-cold = 9.8\nlambda-hot = 10\nt-hot = 1\nt-cold = 0.1\n";
    }
    const auto r = call({"--config", cfg.string(), "cycle"});
    CHECK(r.code == 0);
    CHECK(r.out == golden("cycle_large.json"));
    {
        std::ofstream f(cfg);
        f << "no-such-option = 1\n";
    }
    CHECK(call({"--config", cfg.string(), "spectrum"}).code == otto::cli::kArgumentError);
    fs::remove(cfg);

    const std::vector<std::string> hot{"cycle", "--lambda-cold", "0", "--lambda-hot", "0.01", "--t-hot", "50",
                                       "--t-cold", "0.1"};
    CHECK(call(hot).code == 0);
    setenv("OTTO_N_MAX", "5", 1);
    CHECK(call(hot).code == otto::cli::kNumericalError);
    unsetenv("OTTO_N_MAX");
    setenv("OTTO_REL_TOL", "-1", 1);
    CHECK(call(hot).code == otto::cli::kArgumentError);
    unsetenv("OTTO_REL_TOL");
}
