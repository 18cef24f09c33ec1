#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/cyclotomic.hpp"
#include "umbral/rational.hpp"
#include "umbral/scalar.hpp"

using namespace umbral;

TEST_CASE("rational basics") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational(7, 3) < Rational(5, 2));
}

TEST_CASE("floor_div") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_div(Int(7), Int(-2)) == -4);
    CHECK(floor_div(Int(-6), Int(3)) == -2);
}

TEST_CASE("cyclotomic polynomial and roots of unity") {
    // Phi_12 = x^4 - x^2 + 1
    auto p = cyclotomic_polynomial(12);
    CHECK(p == std::vector<Int>{1, 0, -1, 0, 1});
    Cyclotomic z = Cyclotomic::root_of_unity(1, 5);
    Cyclotomic acc(Rational(1l));
    for (int i = 0; i < 5; ++i) acc = acc * z;
    CHECK(acc == Cyclotomic(Rational(1l)));
    // 1 + z + z^2 + z^3 + z^4 = 0
    Cyclotomic s(Rational(0l));
    Cyclotomic zi(Rational(1l));
    for (int i = 0; i < 5; ++i) {
        s = s + zi;
        zi = zi * z;
    }
    CHECK(s.is_zero());
}

TEST_CASE("sqrt_minus squares to -n") {
    for (long n : {1L, 2L, 3L, 5L, 7L, 11L, 15L, 23L}) {
        Cyclotomic s = Cyclotomic::sqrt_minus(n);
        CHECK((s * s) == Cyclotomic(Rational(-n)));
    }
}

TEST_CASE("b_n satisfies x^2 + x + (n+1)/4 = 0") {
    for (long n : {3L, 7L, 11L, 15L, 23L}) {
        Cyclotomic b = Cyclotomic::b_n(n);
        Cyclotomic v = b * b + b + Cyclotomic(Rational(n + 1, 4));
        CHECK(v.is_zero());
    }
}

TEST_CASE("conjugation is an involution and fixes rationals") {
    Cyclotomic b = Cyclotomic::b_n(7);
    CHECK(b.conj().conj() == b);
    CHECK((b + b.conj()) == Cyclotomic(Rational(-1l)));   // trace of b_7
    CHECK((b * b.conj()) == Cyclotomic(Rational(2l)));    // norm (1+7)/4
    CHECK(Cyclotomic(Rational(5, 3)).conj() == Cyclotomic(Rational(5, 3)));
}

TEST_CASE("scalar promotion and demotion") {
    Scalar a(Rational(2l));
    Scalar i(Cyclotomic::root_of_unity(1, 4));
    Scalar p = i * i; // -1 demotes to rational
    CHECK(p.is_rational());
    CHECK(p.rat() == Rational(-1l));
    Scalar q = a + i;
    CHECK(!q.is_rational());
    Scalar r = q - i;
    CHECK(r.is_rational());
    CHECK(r.rat() == Rational(2l));
}
