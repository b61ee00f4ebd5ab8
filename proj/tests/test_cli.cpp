#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "qschur/report.hpp"

#ifndef QSCHUR_CLI_PATH
#error "QSCHUR_CLI_PATH must name the qschur executable"
#endif

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + QSCHUR_CLI_PATH + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

qschur::Report parse(const std::string& jsonl) {
    std::istringstream is(jsonl);
    return qschur::Report::from_jsonl(is);
}

}  // namespace

TEST_CASE("cli: qnum table") {
    const Run r = run("qnum --n 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("[3]_{v,t} = -(v^2 + 1 + v^-2)\n") != std::string::npos);
}

TEST_CASE("cli: schur-basis JSON table") {
    const Run r = run("schur-basis --d 2 --json");
    REQUIRE(r.status == 0);
    const qschur::Report rep = parse(r.out);
    bool found = false;
    for (const auto& c : rep.results())
        if (c.check == "table") {
            found = true;
            CHECK(c.data["d"] == 2);
            CHECK(c.data["basis"].size() == 10);
        }
    CHECK(found);
    CHECK(rep.ok());
}

TEST_CASE("cli: udot clark-wang window") {
    const Run r = run("udot --check clark-wang --lambda -5..5");
    CHECK(r.status == 0);
    CHECK(r.out.find("[PASS] udot/clark-wang") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("udot --check nope").status == 2);
    CHECK(run("module --d-range 5..2").status == 2);
    CHECK(run("module --d 1 --d-range 1..2").status == 2);
    CHECK(run("module --jobs 0").status == 2);
    CHECK(run("qnum --n 2", "QSCHUR_MAX_DEGREE=abc").status == 2);
}

TEST_CASE("cli: failures exit 1 with a machine-readable list") {
    const Run r = run("u-verify --check ef-divided --json", "QSCHUR_MAX_DEGREE=3");
    CHECK(r.status == 1);
    const qschur::Report rep = parse(r.out);
    CHECK(rep.failed() > 0);
    CHECK(r.out.find("\"failed\":") != std::string::npos);
}

TEST_CASE("cli: JSON output is deterministic and versioned") {
    const Run a = run("u-verify --json --seed 5 --jobs 3");
    const Run b = run("u-verify --json --seed 5 --jobs 1");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\":\"qschur-report/1\"") != std::string::npos);
    const Run c = run("u-verify --json --seed 6");
    CHECK(c.out != a.out);
    const qschur::Report rep = parse(a.out);
    std::ostringstream again;
    rep.write_jsonl(again);
    CHECK(again.str() == a.out);
}

TEST_CASE("cli: module action table") {
    const Run r = run("module --d 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("F xi_1 = i*(v + v^-1) xi_2") != std::string::npos);
}

TEST_CASE("cli: every subcommand runs on a small range") {
    for (const char* cmd : {"tensor --d-range 0..3", "schur-verify --d-range 0..3", "psi --d 1 --check generators,multiplicative",
                            "chi --d 2", "phid --d-range 0..2", "form --d-range 0..3", "udot --lambda -2..2 --deg 1"}) {
        CAPTURE(cmd);
        CHECK(run(cmd).status == 0);
    }
}
