#include "umbral/scalar.hpp"

namespace umbral {

void Scalar::assign(Cyclotomic c) {
    if (c.is_rational())
        v_ = c.rational_part();
    else
        v_ = std::move(c);
}

bool Scalar::is_zero() const {
    if (is_rational()) return std::get<Rational>(v_).is_zero();
    return std::get<Cyclotomic>(v_).is_zero();
}

const Rational& Scalar::rat() const {
    if (!is_rational()) throw std::domain_error("Scalar: cyclotomic where rational expected");
    return std::get<Rational>(v_);
}

Cyclotomic Scalar::cyc() const {
    if (is_rational()) return Cyclotomic(std::get<Rational>(v_));
    return std::get<Cyclotomic>(v_);
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-std::get<Rational>(v_));
    return Scalar(-std::get<Cyclotomic>(v_));
}

Scalar Scalar::conj() const {
    if (is_rational()) return *this;
    return Scalar(std::get<Cyclotomic>(v_).conj());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_rational() && o.is_rational())
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    else
        assign(cyc() + o.cyc());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_rational() && o.is_rational())
        std::get<Rational>(v_) -= std::get<Rational>(o.v_);
    else
        assign(cyc() - o.cyc());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational())
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    else
        assign(cyc() * o.cyc());
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.rat() == b.rat();
    return a.cyc() == b.cyc();
}

} // namespace umbral
