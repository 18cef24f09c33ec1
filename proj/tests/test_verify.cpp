#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/verify.hpp"

using namespace umbral;

TEST_CASE("n_chi examples") {
    // A12^2 trivial chi: lcm{1*1, 1*4, 2*8} = 16
    CHECK(n_chi("A12^2", 0) == 16);
    // A7^2D5^2 trivial chi: lcm{1,2,2,2,8} = 8
    CHECK(n_chi("A7^2D5^2", 0) == 8);
}

TEST_CASE("sturm bound") {
    CHECK(sturm_bound(2, Int(2)) == 1);
    CHECK(sturm_bound(2, Int(8)) == 64);  // 8^3 * 3/4 = 384; 384/6 = 64
    // monotonicity under divisibility
    CHECK(sturm_bound(2, Int(4)) <= sturm_bound(2, Int(8)));
    CHECK(sturm_bound(2, Int(8)) <= sturm_bound(2, Int(16)));
}

TEST_CASE("polar multiplicity: trivial character gets -2, others 0") {
    Rational t(3l);
    const GroupTable& G = GroupTable::load("A7^2D5^2");
    for (size_t c = 0; c < G.num_chars(); ++c) {
        MultiplicitySeries ms = multiplicity_series("A7^2D5^2", c, 1, t);
        Rational v = ms.series.coeff(Rational(-1, 32)).rat();
        CHECK(v == (c == 0 ? Rational(-2l) : Rational(0l)));
    }
}

TEST_CASE("multiplicities of A7^2D5^2 are non-negative integers to n=20") {
    Report rep = check_nonneg_integral("A7^2D5^2", 20);
    CHECK(rep.findings == 0);
}

TEST_CASE("degree-weighted multiplicities reproduce H_{e,1} coefficient 90 (A1^24)") {
    Rational t(3l);
    const GroupTable& G = GroupTable::load("A1^24");
    Rational acc;
    for (size_t c = 0; c < G.num_chars(); ++c) {
        MultiplicitySeries ms = multiplicity_series("A1^24", c, 1, t);
        Rational deg = G.chi(c, 0).rational_part();
        acc += deg * ms.series.coeff(Rational(7, 8)).rat();
    }
    CHECK(acc == Rational(90l));
}

TEST_CASE("reconstruction identity for A8^3") {
    Report rep = reconstruct_check("A8^3", Rational(8l));
    CHECK(rep.findings == 0);
    CHECK(rep.entries.size() > 0);
}

TEST_CASE("identity suite passes") {
    Report rep = identity_suite("mock-theta-A2^12");
    CHECK(rep.findings == 0);
    CHECK(rep.entries.size() == 11);
}

TEST_CASE("report json is deterministic") {
    Report a = reconstruct_check("A7^2D5^2", Rational(4l));
    Report b = reconstruct_check("A7^2D5^2", Rational(4l));
    CHECK(a.json() == b.json());
    CHECK(a.json().find("\"findings\":0") != std::string::npos);
}

TEST_CASE("csv schema") {
    std::string csv = multiplicity_csv("A7^2D5^2", 1, 5);
    CHECK(csv.substr(0, 2) == "n,");
    CHECK(csv.find("chi_5") != std::string::npos);
}
