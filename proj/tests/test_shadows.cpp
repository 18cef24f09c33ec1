#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/shadows.hpp"

using namespace umbral;

TEST_CASE("pure A-type shadows") {
    Rational t(20l);
    // X=A1^24, g=1A: S_{g,1} = 24 S_{2,1} = 24 eta^3
    QSeries s = shadow_component("A1^24", "1A", 1, t);
    QSeries e3 = eta_quotient({{1, 3}}, t);
    CHECK((s - e3.scaled(Scalar(Rational(24l)))).is_zero());
}

TEST_CASE("D-type m=6 rule") {
    Rational t(12l);
    QSeries s = shadow_component("D4^6", "1A", 3, t);
    QSeries s63 = unary_theta(Rational(6l), Rational(3l), ThetaMode::S, t);
    CHECK((s - s63.scaled(Scalar(Rational(12l)))).is_zero());
}

TEST_CASE("E-type m=30 rule") {
    Rational t(12l);
    QSeries s = shadow_component("E8^3", "1A", 1, t);
    QSeries sum(1, t);
    for (long rr : {1L, 11L, 19L, 29L})
        sum += unary_theta(Rational(30l), Rational(rr), ThetaMode::S, t);
    CHECK((s - sum.scaled(Scalar(Rational(3l)))).is_zero());
}

TEST_CASE("shadow symmetries: odd and 2m-periodic") {
    Rational t(10l);
    for (const char* X : {"A1^24", "A5^4D4", "D4^6", "A7^2D5^2", "E6^4", "D12^2"}) {
        const GroupTable& G = GroupTable::load(X);
        long m = G.root_system().coxeter;
        for (long r = 0; r <= m; ++r) {
            QSeries a = shadow_component(X, "1A", r, t);
            QSeries b = shadow_component(X, "1A", -r, t);
            QSeries c = shadow_component(X, "1A", r + 2 * m, t);
            CHECK((a + b).is_zero());
            CHECK((a - c).is_zero());
        }
    }
}

TEST_CASE("vanishing pattern for pure-D with m = 2 mod 4") {
    Rational t(10l);
    for (const char* X : {"D6^4", "D8^3", "D12^2", "D24"}) {
        const GroupTable& G = GroupTable::load(X);
        for (long r = 2; r < G.root_system().coxeter; r += 2)
            CHECK(shadow_component(X, "1A", r, t).is_zero());
    }
}

TEST_CASE("normalized leading coefficient of S_{e,1}") {
    Rational t(6l);
    for (const auto& X : GroupTable::all_root_systems()) {
        const GroupTable& G = GroupTable::load(X);
        long m = G.root_system().coxeter;
        QSeries s = shadow_component(X, "1A", 1, t);
        Rational lead = s.coeff(Rational(1, 4 * m)).rat();
        CHECK(lead.sign() > 0);
        // dividing by the total twisted-Euler weight leaves leading coefficient 1
        QSeries unit = s.scaled(Scalar(Rational(lead.den(), lead.num())));
        CHECK(unit.coeff(Rational(1, 4 * m)).rat() == Rational(1l));
    }
}

TEST_CASE("vector accessor symmetry") {
    Rational t(8l);
    VectorQSeries v = shadow("A5^4D4", "2B", t);
    for (long r = 1; r < 6; ++r) {
        CHECK((v.at(r) + v.at(-r)).is_zero());
        CHECK((v.at(r) - v.at(r + 12)).is_zero());
    }
    CHECK(v.at(6).is_zero());
    // json export mentions flags
    std::string js = vector_qseries_to_json(v);
    CHECK(js.find("odd") != std::string::npos);
}
