#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "berezin/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("BEREZIN_CLI");
    REQUIRE(path != nullptr);
    return path;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("berezin_test_" + name);
}

}  // namespace

TEST_CASE("comp subcommand: elliptic eta=-1 reports a degenerate segment") {
    const auto json_path = temp_file("comp.json");
    const auto csv_path = temp_file("comp.csv");
    const auto svg_path = temp_file("comp.svg");
    const RunResult r = run("comp --beta 0 --eta -1 --gamma 0 --grid 160,16,0.95"
                            " --out-json " + json_path.string() +
                            " --out-csv " + csv_path.string() +
                            " --out-svg " + svg_path.string());
    REQUIRE(r.exit_code == 0);

    std::ifstream in(json_path);
    REQUIRE(in.good());
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("report").at("verdict") == "degenerate-segment");
    CHECK(j.at("config").at("gamma") == 0.0);
    CHECK(j.at("toolkit").get<std::string>().find("berezin-toolkit") == 0);

    // values span (eps, 1]
    CHECK(j.at("min_modulus").get<double>() > 0.0);
    CHECK(j.at("min_modulus").get<double>() < 0.01);
    CHECK_THAT(j.at("ber").get<double>(), Catch::Matchers::WithinAbs(1.0, 1e-12));

    // CSV written by the command re-parses into the same sample
    std::ifstream csv_in(csv_path);
    REQUIRE(csv_in.good());
    const berezin::RangeSample sample = berezin::read_range_csv(csv_in);
    CHECK(sample.grid.n_radii == 160);
    CHECK(sample.points.size() == 160 * 16 + 1);

    std::ifstream svg_in(svg_path);
    std::stringstream svg;
    svg << svg_in.rdbuf();
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("circle") != std::string::npos);
}

TEST_CASE("weyl subcommand reports ber = (1-|beta|^2)^((gamma+2)/2)") {
    const auto json_path = temp_file("weyl.json");
    const RunResult r =
        run("weyl --beta 0.6 --eta 1 --gamma 0 --grid 40,64,0.99 --out-json " +
            json_path.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(json_path);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK_THAT(j.at("ber").get<double>(), Catch::Matchers::WithinAbs(0.64, 1e-6));
    const auto argmax = j.at("ber_argmax");
    CHECK_THAT(argmax[0].get<double>(), Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(argmax[1].get<double>(), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("toeplitz subcommand with the modsq catalog symbol") {
    const auto json_path = temp_file("toeplitz.json");
    const RunResult r = run(R"(toeplitz --symbol '{"catalog":"modsq"}' --gamma 0 )"
                            "--grid 10,16,0.9 --quad 64,256 --out-json " + json_path.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(json_path);
    const nlohmann::json j = nlohmann::json::parse(in);
    // Example (ii): sampled values stay above 1/(gamma+2)
    CHECK(j.at("min_modulus").get<double>() >= 0.5 - 1e-6);
    CHECK(j.at("ber").get<double>() < 1.0);
}

TEST_CASE("verify subcommand: convexity suite passes and is machine readable") {
    const auto json_path = temp_file("verify.json");
    const RunResult r = run("verify convexity --out-json " + json_path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("[PASS] convexity/elliptic-eta-i-nonconvex") != std::string::npos);

    std::ifstream in(json_path);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("checks").size() == 5);
}

TEST_CASE("rule-dump emits the radial rule") {
    const RunResult r = run("rule-dump --gamma 1 --quad 4,16");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("t,weight") != std::string::npos);
    // 4 radial nodes -> header comment + column header + 4 rows
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
}

TEST_CASE("exit codes distinguish config and numeric failures") {
    SECTION("gamma <= -1 is invalid configuration") {
        CHECK(run("comp --beta 0 --eta 1 --gamma -1.5").exit_code == 2);
    }
    SECTION("bad grid is invalid configuration") {
        CHECK(run("comp --beta 0 --eta 1 --gamma 0 --grid 10,16,1.5").exit_code == 2);
    }
    SECTION("non-unimodular eta is invalid configuration") {
        CHECK(run("comp --beta 0 --eta 0.5 --gamma 0").exit_code == 2);
    }
    SECTION("beta outside the disk is invalid configuration") {
        CHECK(run("weyl --beta 1.2 --eta 1 --gamma 0").exit_code == 2);
    }
    SECTION("malformed symbol JSON is invalid configuration") {
        CHECK(run("toeplitz --symbol not-json --gamma 0").exit_code == 2);
    }
    SECTION("unknown subcommand is invalid configuration") {
        CHECK(run("bogus").exit_code == 2);
    }
    SECTION("unknown verify suite is invalid configuration") {
        CHECK(run("verify bogus").exit_code == 2);
    }
}
