#ifndef UMBRAL_SCALAR_HPP
#define UMBRAL_SCALAR_HPP

#include "umbral/cyclotomic.hpp"
#include "umbral/rational.hpp"

#include <variant>

namespace umbral {

/// Series coefficient: Rational by default, promoted to Cyclotomic on demand
/// and demoted back whenever all non-constant coordinates vanish.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(Cyclotomic c) { assign(std::move(c)); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const;

    const Rational& rat() const; // throws if cyclotomic
    Cyclotomic cyc() const;      // promotes if rational

    Scalar operator-() const;
    Scalar conj() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void assign(Cyclotomic c);
    std::variant<Rational, Cyclotomic> v_;
};

} // namespace umbral

#endif
