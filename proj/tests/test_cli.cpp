#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/qseries.hpp"

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(UMBRAL_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

} // namespace

TEST_CASE("expand emits the A2^12 2B leading coefficient -2 at -1/12") {
    RunResult r = run("expand --system A2^12 --class 2B --r 1 --order 4 --format json");
    CHECK(r.status == 0);
    umbral::QSeries s = umbral::qseries_from_json(r.out);
    CHECK(s.valuation().value() == umbral::Rational(-1, 12));
    CHECK(s.coeff(umbral::Rational(-1, 12)).rat() == umbral::Rational(-2l));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("expand --system BOGUS --order 2").status == 1); // domain error: unknown system
    CHECK(run("expand").status == 2);                          // missing required option
    CHECK(run("bogus-subcommand").status == 2);
    CHECK(run("expand --system A24 --order 2 --format xml").status == 2);
}

TEST_CASE("verify exits 0 with zero findings") {
    RunResult r = run("verify --system A7^2D5^2 --bound 12");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"findings\":0") != std::string::npos);
}

TEST_CASE("deterministic output bytes") {
    RunResult a = run("expand --system A1^24 --class 2B --r 1 --order 6");
    RunResult b = run("expand --system A1^24 --class 2B --r 1 --order 6");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("group subcommand validates and reports centralizers") {
    RunResult r = run("group --system A8^3");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"order\":12") != std::string::npos);
}

TEST_CASE("fixtures subcommand reports ok") {
    RunResult r = run("fixtures");
    CHECK(r.status == 0);
    CHECK(r.out.find("hash-mismatch") == std::string::npos);
}

TEST_CASE("rademacher csv header") {
    RunResult r = run("rademacher --index 2 --K 3 --n 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("fluctuation") != std::string::npos);
}
