#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DQM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

}  // namespace

TEST_CASE("spectrum single point emits json") {
    const RunResult r = run("spectrum --potential harmonic --omega 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"energy\": 1.0") != std::string::npos);
}

TEST_CASE("flags override config file values") {
    const std::string cfg = "/tmp/dqm_cli_test_config.json";
    write_file(cfg, R"({"potential": "harmonic", "omega": 4.0, "alpha": 1.0})");

    RunResult r = run("spectrum --config " + cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"energy\": 4.0") != std::string::npos);

    r = run("spectrum --config " + cfg + " --omega 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"energy\": 1.0") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("unknown config keys are a configuration error") {
    const std::string cfg = "/tmp/dqm_cli_test_badkey.json";
    write_file(cfg, R"({"omegaa": 2.0})");
    const RunResult r = run("spectrum --config " + cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown config field") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("invalid physics parameters are a configuration error") {
    const RunResult r = run("spectrum --potential harmonic --alpha 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("unsatisfiable requests are a validation failure") {
    const RunResult r = run("spectrum --potential inverse-square --b 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("sweeps emit csv with the units header") {
    const RunResult r = run(
        "spectrum --potential harmonic --sweep omega "
        "--sweep-min 1 --sweep-max 2 --sweep-steps 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# units: hbar = 1") != std::string::npos);
    CHECK(r.output.find("variable,value,energy") != std::string::npos);
    CHECK(r.output.find("omega,1,1") != std::string::npos);
    CHECK(r.output.find("omega,2,2") != std::string::npos);
}

TEST_CASE("validate battery passes and is deterministic") {
    const RunResult a = run("validate --sweep-seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find(", 0 failed") != std::string::npos);
    const RunResult b = run("validate --sweep-seed 7");
    CHECK(a.output == b.output);
}
