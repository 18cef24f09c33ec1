#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/mckay.hpp"
#include "umbral/mocktheta.hpp"
#include "umbral/weight2.hpp"

using namespace umbral;

namespace {

void check_equal(const QSeries& a, const QSeries& b) {
    QSeries d = a - b;
    CHECK_MESSAGE(d.is_zero(), "difference: ", d.str());
}

} // namespace

TEST_CASE("weight-two table entries") {
    Rational t(10l);
    // F^{(2)}_{2A} = 16 Lambda_2: constant term 16/12 = 4/3.
    QSeries F2A = weight2_F("2", "2A", t);
    CHECK(F2A.coeff(Rational(0l)).rat() == Rational(4, 3));
    // f_{23,b} leading term q^2.
    CHECK(f23b(t).valuation().value() == Rational(2l));
    // f44 = q + 0*q^2 + ...
    QSeries f = f44(Rational(60l));
    CHECK(f.coeff(Rational(1l)).rat() == Rational(1l));
    CHECK(f.coeff(Rational(2l)).rat() == Rational(0l));
    CHECK(f.coeff(Rational(3l)).rat() == Rational(1l));
    CHECK(f.coeff(Rational(5l)).rat() == Rational(-3l));
}

TEST_CASE("mock theta expansions") {
    Rational t(12l);
    QSeries f = mock_f(t);
    CHECK(f.coeff(Rational(0l)).rat() == Rational(1l));
    CHECK(f.coeff(Rational(1l)).rat() == Rational(1l));
    CHECK(f.coeff(Rational(2l)).rat() == Rational(-2l));
    CHECK(f.coeff(Rational(3l)).rat() == Rational(3l));
    CHECK(f.coeff(Rational(4l)).rat() == Rational(-3l));
    QSeries om = mock_omega(t);
    CHECK(om.coeff(Rational(0l)).rat() == Rational(1l));
    CHECK(om.coeff(Rational(1l)).rat() == Rational(2l));
    CHECK(om.coeff(Rational(2l)).rat() == Rational(3l));
    CHECK(om.coeff(Rational(3l)).rat() == Rational(4l));
    CHECK(om.coeff(Rational(4l)).rat() == Rational(6l));
}

TEST_CASE("M24 low coefficients and the polar law at l=2") {
    Rational t(5l);
    QSeries H1A = mct_component("A1^24", "1A", 1, t);
    CHECK(H1A.coeff(Rational(-1, 8)).rat() == Rational(-2l));
    CHECK(H1A.coeff(Rational(7, 8)).rat() == Rational(90l));
    QSeries H2A = mct_component("A1^24", "2A", 1, t);
    CHECK(H2A.coeff(Rational(-1, 8)).rat() == Rational(-2l));
    CHECK(H2A.coeff(Rational(7, 8)).rat() == Rational(-6l)); // tr(2A) on 45+45bar
    QSeries H2B = mct_component("A1^24", "2B", 1, t);
    CHECK(H2B.coeff(Rational(-1, 8)).rat() == Rational(-2l));
    CHECK(H2B.coeff(Rational(7, 8)).rat() == Rational(10l));
    QSeries H23 = mct_component("A1^24", "23A", 1, t);
    CHECK(H23.coeff(Rational(-1, 8)).rat() == Rational(-2l));
}

TEST_CASE("section-1 example: mock theta identities for X=A2^12 (60 coefficients)") {
    Rational t(62l);
    VectorQSeries H2B = mct("A2^12", "2B", t);
    VectorQSeries H2C = mct("A2^12", "2C", t);
    VectorQSeries H4C = mct("A2^12", "4C", t);
    VectorQSeries H6C = mct("A2^12", "6C", t);
    VectorQSeries H6D = mct("A2^12", "6D", t);
    VectorQSeries H8C = mct("A2^12", "8C", t);

    // H_{2B,1} = H_{2C,1} = H_{4C,1} = -2 q^{-1/12} f(q^2)
    QSeries f2 = qs_rescale(mock_f(Rational(124l)), Rational(2l));
    QSeries rhs_f = f2.scaled(Scalar(Rational(-2l))).shifted(Rational(-1, 12)).truncated(t);
    check_equal(H2B.at(1).truncated(t), rhs_f);
    check_equal(H2C.at(1).truncated(t), rhs_f);
    check_equal(H4C.at(1).truncated(t), rhs_f);

    // H_{6C,1} = H_{6D,1} = -2 q^{-1/12} chi(q^2)
    QSeries chi2 = qs_rescale(mock_chi(Rational(124l)), Rational(2l));
    QSeries rhs_chi = chi2.scaled(Scalar(Rational(-2l))).shifted(Rational(-1, 12)).truncated(t);
    check_equal(H6C.at(1).truncated(t), rhs_chi);
    check_equal(H6D.at(1).truncated(t), rhs_chi);

    // H_{8C,1} = H_{8D,1} = -2 q^{-1/12} phi(-q^2)
    QSeries phin = qs_rescale(substitute_neg_q(mock_phi(Rational(124l))), Rational(2l));
    QSeries rhs_phi = phin.scaled(Scalar(Rational(-2l))).shifted(Rational(-1, 12)).truncated(t);
    check_equal(H8C.at(1).truncated(t), rhs_phi);

    // H_{2B,2} = -H_{2C,2} = -4 q^{2/3} omega(-q)
    QSeries omn = substitute_neg_q(mock_omega(Rational(62l)));
    QSeries rhs_om = omn.scaled(Scalar(Rational(-4l))).shifted(Rational(2, 3)).truncated(t);
    check_equal(H2B.at(2).truncated(t), rhs_om);
    check_equal(-H2C.at(2).truncated(t), rhs_om);

    // H_{6C,2} = -H_{6D,2} = 2 q^{2/3} rho(-q)
    QSeries rhon = substitute_neg_q(mock_rho(Rational(62l)));
    QSeries rhs_rho = rhon.scaled(Scalar(Rational(2l))).shifted(Rational(2, 3)).truncated(t);
    check_equal(H6C.at(2).truncated(t), rhs_rho);
    check_equal(-H6D.at(2).truncated(t), rhs_rho);
}

TEST_CASE("D4^6 class 3C is the eta quotient -2 eta(t)^2/eta(3t)") {
    Rational t(8l);
    QSeries h = mct_component("D4^6", "3C", 1, t);
    QSeries rhs = qs_div(eta_quotient({{1, 2}}, t), eta_quotient({{3, 1}}, t))
                      .scaled(Scalar(Rational(-2l)))
                      .truncated(t);
    check_equal(h, rhs);
    CHECK(h.valuation().value() == Rational(-1, 24));
    CHECK(h.coeff(Rational(-1, 24)).rat() == Rational(-2l));
}

TEST_CASE("polar-term law across a sample of root systems at trunc 3") {
    Rational t(3l);
    struct Probe {
        const char* X;
        const char* cls;
    };
    std::vector<Probe> probes = {
        {"A1^24", "5A"},  {"A2^12", "12A"}, {"A3^8", "7A"},  {"A4^6", "4C"},
        {"A5^4D4", "8A"}, {"A6^4", "3A"},   {"A7^2D5^2", "2B"}, {"A8^3", "3A"},
        {"A9^2D6", "4A"}, {"A11D7E6", "2A"}, {"A12^2", "4A"},  {"A15D9", "2A"},
        {"A17E7", "1A"},  {"A24", "2A"},    {"D4^6", "15A"},  {"D6^4", "4A"},
        {"D8^3", "2A"},   {"D10E7^2", "2A"}, {"D12^2", "2A"},  {"D16E8", "1A"},
        {"D24", "1A"},    {"E6^4", "3A"},   {"E8^3", "3A"},
    };
    for (const auto& p : probes) {
        const GroupTable& G = GroupTable::load(p.X);
        long m = G.root_system().coxeter;
        QSeries h = mct_component(p.X, p.cls, 1, t);
        CAPTURE(p.X);
        CAPTURE(p.cls);
        CHECK(h.valuation().value() == Rational(-1, 4 * m));
        CHECK(h.coeff(Rational(-1, 4 * m)).rat() == Rational(-2l));
    }
}

TEST_CASE("donor consistency: H^{(5)}_{10A,r} = -(-1)^r H^{(5)}_{5A,r}") {
    Rational t(6l);
    VectorQSeries a = mct("A4^6", "5A", t);
    VectorQSeries b = mct("A4^6", "10A", t);
    for (long r = 1; r <= 4; ++r) {
        QSeries rhs = r % 2 == 0 ? -a.at(r) : a.at(r);
        check_equal(b.at(r), rhs);
    }
}

TEST_CASE("parity twist is an involution and fixes r=1") {
    Rational t(4l);
    VectorQSeries v = mct("A3^8", "1A", t);
    VectorQSeries w = parity_twist(parity_twist(v));
    for (const auto& [r, s] : v.comps) check_equal(w.at(r), s);
    VectorQSeries tw = parity_twist(v);
    check_equal(tw.at(1), v.at(1));
}

TEST_CASE("unspecified component for (D16E8, 1A, 9)") {
    Rational t(3l);
    VectorQSeries v = mct("D16E8", "1A", t);
    CHECK_THROWS_AS(v.at(9), std::domain_error);
    CHECK_THROWS_AS(v.at(21), std::domain_error);
    CHECK(!v.defined(9));
    CHECK(v.defined(7));
    CHECK(v.at(29).coeff(Rational(-1, 120)).rat() == Rational(-2l)); // = H_1 by symmetry
}

TEST_CASE("family vanishing: l=6+3 even components, l=12+4 zero set") {
    Rational t(4l);
    VectorQSeries v = mct("D4^6", "1A", t);
    for (long r : {2L, 4L, 6L}) CHECK(v.at(r).is_zero());
    VectorQSeries w = mct("E6^4", "1A", t);
    for (long r : {2L, 3L, 6L, 9L, 10L}) CHECK(w.at(r).is_zero());
    check_equal(w.at(7), w.at(1));
    check_equal(w.at(8), w.at(4));
    check_equal(w.at(11), w.at(5));
}
