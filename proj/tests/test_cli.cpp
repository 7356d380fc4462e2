#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "exch/serialization.hpp"

using namespace exch;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EXCH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("bounds matches the worked value") {
    RunResult r = run_cli("bounds --ks 2 --ns 3");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["beta"] == "1/3");
    CHECK(j["decimal"].get<double>() == doctest::Approx(1.0 / 3));
}

TEST_CASE("orbits reports 10 joint row-column classes") {
    RunResult r = run_cli("orbits --group joint_row_col --m 2 --alphabet 0,1");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["orbit_count"] == 10);
    CHECK(j["burnside_count"] == 10);
    CHECK(j["orbits"].size() == 10);
}

TEST_CASE("counterexample emits an invariant distribution that reloads") {
    RunResult r = run_cli("counterexample");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["invariant"] == true);
    FiniteDistribution P = distribution_from_json(j["distribution"]);
    CHECK(P.at(P.space().encode(P.space().parse_state("0,1,0,0"))) == Rational(1, 2));
    FiniteDistribution pair = distribution_from_json(j["off_diagonal_pair"]);
    CHECK(pair.support_size() == 2);
}

TEST_CASE("reports are byte-identical across runs and reload exactly") {
    std::string dist = write_temp("anti.json",
                                  R"({"space":{"kind":"sequence","length":2,"alphabet":[0,1]},)"
                                  R"("mass":{"0,1":"1/2","1,0":"1/2"}})");
    for (const std::string& args :
         {std::string("definetti-check --dist ") + dist + " --k 2", std::string("definetti-gap --dist ") + dist + " --grid 101",
          std::string("extend-check --dist ") + dist + " --n 3", std::string("project --dist ") + dist + " --k 1",
          std::string("svd-sim --m 3 --joint --n-draws 200 --seed 42 --quiet")}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }

    // project output is itself a loadable distribution file
    RunResult proj = run_cli(std::string("project --dist ") + dist + " --k 1");
    FiniteDistribution P = distribution_from_json(Json::parse(proj.out));
    CHECK(P.at(0) == Rational(1, 2));
    CHECK(P.at(1) == Rational(1, 2));
}

TEST_CASE("exit codes: validation 2, cap 3, unknown 2") {
    CHECK(run_cli("bounds --ks 5 --ns 2").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    CHECK(run_cli("orbits --group sequence --m 40 --alphabet 0,1").exit_code == 3);
    CHECK(run_cli("bounds --ks 2 --ns 3 --max-states 99999999").exit_code == 2); // missing acknowledgment
    // randomized subcommands demand an explicit seed
    CHECK(run_cli("svd-sim --m 3 --joint --n-draws 10").exit_code == 2);
}

TEST_CASE("test subcommands run end to end from sample files") {
    std::string samples = write_temp("samples.json", R"(["0,1","1,0","0,1","1,0","0,1","1,0"])");
    RunResult r = run_cli(std::string("test-exch --samples ") + samples + " --group sequence --m 2 --B 49 --seed 7");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["statistic_tv_l1"] == "0");
    CHECK(j["p_value"] == "1");

    RunResult rx = run_cli(std::string("test-extend --samples ") + samples + " --k 2 --rmax 4 --B 19 --seed 7");
    REQUIRE(rx.exit_code == 0);
    Json jx = Json::parse(rx.out);
    CHECK(jx["T"] == 2);

    // identical configs give byte-identical reports
    RunResult rx2 = run_cli(std::string("test-extend --samples ") + samples + " --k 2 --rmax 4 --B 19 --seed 7");
    CHECK(rx.out == rx2.out);
}

TEST_CASE("--out writes the same report to a file") {
    RunResult direct = run_cli("bounds --ks 2,2 --ns 2,2");
    std::string path = "cli_tmp_out.json";
    RunResult redirected = run_cli("bounds --ks 2,2 --ns 2,2 --out " + path);
    REQUIRE(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == direct.out);
    Json j = Json::parse(content);
    CHECK(j["beta"] == "3/4");
}
