#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/jacobi.hpp"

using namespace umbral;

namespace {

bool jzero(const JSeries& s) {
    for (const auto& [k, r] : s.rows())
        for (const auto& c : r.c)
            if (!c.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("theta sum equals product form (triple product identity)") {
    // theta_real / R-chain == 1 exactly, q-order 12, both arguments scaled.
    for (auto [j, s, a] : {std::tuple<int, long, long>{1, 1, 1}, {1, 2, 2}, {2, 1, 1},
                           {2, 3, 3}, {3, 2, 2}, {4, 1, 2}}) {
        JSeries x = theta_real(j, s, a, Rational(12l));
        divide_theta_real(x, j, s, a, 80);
        for (const auto& [k, r] : x.rows()) {
            for (long p = r.lo; p <= r.hi(); ++p) {
                Rational expect = (k == 0 && p == 0) ? Rational(1l) : Rational();
                CHECK(*r.at(p) == expect);
            }
        }
        CHECK(!x.rows().empty());
    }
}

TEST_CASE("theta1 lowest q-order is i(u^{-1/2} - u^{1/2})") {
    SparseCycJ t1 = theta_jacobi(1, 1, 1, Rational(0l) , Rational(2l));
    Cyclotomic i = Cyclotomic::root_of_unity(1, 4);
    CHECK(t1.terms.at({1, -1}) == i);       // q^{1/8} u^{-1/2}: key (1/8 -> 1 with qden 8)
    CHECK(t1.terms.at({1, 1}) == -i);
}

TEST_CASE("theta_{1/2,1/2} recovers -theta1") {
    // e(-1/4) * theta_{1/2,1/2} = R1, so theta_{1/2,1/2} = i*R1 = i*(i theta1) = -theta1.
    JSeries folded = theta_index_half_folded(1, 1, Rational(10l));
    JSeries r1 = theta_real(1, 1, 1, Rational(10l));
    CHECK(jzero(folded - r1));
}

TEST_CASE("shifted theta pair has rational coefficients") {
    SparseCycJ a = theta_jacobi(1, 1, 1, Rational(1, 3), Rational(6l));
    SparseCycJ b = theta_jacobi(1, 1, 1, Rational(-1, 3), Rational(6l));
    JSeries prod = (a * b).demoted(); // throws if non-rational
    CHECK(!prod.rows().empty());
}

TEST_CASE("theta_index derivative at z=0 equals unary theta") {
    for (auto [m, r] : {std::pair<long, long>{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
        JSeries th = theta_index(m, r, Rational(30l));
        QSeries s = unary_theta(Rational(m), Rational(r), ThetaMode::S, Rational(30l));
        // (1/2pi i) d/dz at 0: sum over u-powers of upow * coeff.
        QSeries acc(4 * m, Rational(30l));
        for (const auto& [k, row] : th.rows())
            for (long p = row.lo; p <= row.hi(); ++p)
                if (!row.at(p)->is_zero())
                    acc.add_to(Rational(Int(k), Int(4 * m)), Scalar(*row.at(p) * Rational(p, 2)));
        CHECK((acc - s).is_zero());
    }
}

TEST_CASE("mu_{m,0} leading row is the annulus expansion of (u+1)/(u-1)") {
    JSeries mu = mu_m0(2, false, Rational(4l), 20);
    CHECK(mu.coeff(Rational(0l), 0) == Rational(-1l));
    for (long w = 2; w <= 18; w += 2) CHECK(mu.coeff(Rational(0l), w) == Rational(-2l));
    CHECK(mu.coeff(Rational(0l), 1) == Rational(0l));
}

TEST_CASE("mu_{1,0} equals Psi_{1,1} to q-order 6") {
    long W = 60;
    JSeries mu = mu_m0(1, false, Rational(6l), W);
    JSeries psi = psi_univ_11(Rational(6l), W);
    JSeries diff = mu - psi;
    for (const auto& [k, r] : diff.rows())
        for (long p = r.lo; p <= std::min(r.hi(), r.cap); ++p)
            CHECK(*r.at(p) == Rational());
}

TEST_CASE("mu parity decomposition sums back") {
    JSeries mu = mu_m0(4, false, Rational(5l), 30);
    JSeries sum = mu_parity(4, 0, Rational(5l), 30) + mu_parity(4, 1, Rational(5l), 30);
    CHECK(jzero(mu - sum));
}

TEST_CASE("phi ladder low rows") {
    // phi^{(4)}_1 q^0 row -> u + 2 + u^{-1}
    JSeries p4 = phi_ladder(4, 1, Rational(6l), 80);
    CHECK(p4.coeff(Rational(0l), -2) == Rational(1l));
    CHECK(p4.coeff(Rational(0l), 0) == Rational(2l));
    CHECK(p4.coeff(Rational(0l), 2) == Rational(1l));
    CHECK(p4.coeff(Rational(0l), 1) == Rational(0l));
    // phi^{(2)}_1 q^0 row sums to 12
    JSeries p2 = phi_ladder(2, 1, Rational(6l), 80);
    Rational sum;
    const URow& row = p2.rows().at(0);
    for (long p = row.lo; p <= row.hi(); ++p) sum += *row.at(p);
    CHECK(sum == Rational(12l));
    // phi^{(5)}_1 q^0 row sums to 3 at u=1
    JSeries p5 = phi_ladder(5, 1, Rational(6l), 80);
    Rational sum5;
    const URow& row5 = p5.rows().at(0);
    for (long p = row5.lo; p <= row5.hi(); ++p) sum5 += *row5.at(p);
    CHECK(sum5 == Rational(3l));
}

TEST_CASE("psi^{(4)}_{1A} = -2 Psi_{1,1} phi^{(4)}_1") {
    Rational t(6l);
    long W = 120;
    JSeries lhs = psi_table("4", "1A", t, W);
    JSeries rhs = (psi_univ_11(t, W) * phi_ladder(4, 1, t, W)).scaled(Rational(-2l));
    JSeries diff = lhs - rhs;
    for (const auto& [k, r] : diff.rows())
        for (long p = r.lo; p <= std::min(r.hi(), r.cap); ++p)
            CHECK(*r.at(p) == Rational());
}

TEST_CASE("M24 series from decomposition: -2 Psi phi^{(2)} with polar 24 mu_{2,0}") {
    Rational t(4l);
    long W = 120;
    JSeries lhs = (psi_univ_11(t, W) * phi_ladder(2, 1, t, W)).scaled(Rational(-2l));
    PolarSpec polar;
    polar.even = Rational(24l);
    polar.odd = Rational(24l);
    Decomposition d = decompose(lhs, Rational(2l), polar, W);
    const QSeries& H1 = d.H.at(1);
    CHECK(H1.coeff(Rational(-1, 8)).rat() == Rational(-2l));
    CHECK(H1.coeff(Rational(7, 8)).rat() == Rational(90l));
    CHECK(H1.coeff(Rational(15, 8)).rat() == Rational(462l));
    CHECK(H1.coeff(Rational(23, 8)).rat() == Rational(1540l));
    // r = 2 component vanishes
    CHECK(d.H.at(2).is_zero());
    // roundtrip: sum_r H_r theta_{2,r} - polar == psi
    JSeries back = recompose(d, polar, t, W);
    JSeries diff = back - lhs;
    for (const auto& [k, r] : diff.rows())
        for (long p = r.lo; p <= std::min(r.hi(), r.cap); ++p)
            CHECK(*r.at(p) == Rational());
}

TEST_CASE("polar coefficients must match twisted Euler characters (wrong polar fails)") {
    Rational t(3l);
    long W = 120;
    JSeries lhs = (psi_univ_11(t, W) * phi_ladder(2, 1, t, W)).scaled(Rational(-2l));
    PolarSpec bad;
    bad.even = Rational(23l);
    bad.odd = Rational(24l);
    CHECK_THROWS_AS(decompose(lhs, Rational(2l), bad, W), std::domain_error);
}

TEST_CASE("window widening invariance at q-order 8") {
    Rational t(8l);
    JSeries a = psi_univ_11(t, 90);
    JSeries b = psi_univ_11(t, 94);
    for (const auto& [k, ra] : a.rows()) {
        const URow& rb = b.rows().at(k);
        long top = std::min(ra.cap, ra.hi());
        for (long p = ra.lo; p <= top; ++p) {
            const Rational* pb = rb.at(p);
            CHECK(*ra.at(p) == (pb ? *pb : Rational()));
        }
    }
}

TEST_CASE("half-integral decomposition: psi^{(5/2)}_{1A} roundtrip and polar") {
    Rational t(4l);
    long W = 140;
    JSeries psi = psi_table("10+5", "1A", t, W);
    PolarSpec polar;
    polar.half = Rational(2 * 4); // 2 * chiD_bar(1A) = 8, times i mu
    Decomposition d = decompose(psi, Rational(5, 2), polar, W);
    // H_{g,1} has the polar term -2 q^{-1/40}
    CHECK(d.H.at(1).coeff(Rational(-1, 40)).rat() == Rational(-2l));
    JSeries back = recompose(d, polar, t, W);
    JSeries diff = back - psi;
    for (const auto& [k, r] : diff.rows())
        for (long p = r.lo; p <= std::min(r.hi(), r.cap); ++p)
            CHECK(*r.at(p) == Rational());
}

TEST_CASE("annulus lower bound: negative powers grow at most linearly") {
    JSeries psi = psi_univ_11(Rational(8l), 90);
    for (const auto& [k, r] : psi.rows()) {
        CHECK(r.lo >= -2 * (k + 2) - 4);
    }
}
