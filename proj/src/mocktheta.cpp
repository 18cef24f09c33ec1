#include "umbral/mocktheta.hpp"

namespace umbral {

namespace {

// f/phi/chi shape: 1 + sum_{n>=1} q^{n^2} / (factors up to level n).
template <typename ExtendFn>
QSeries eisenstein_shape(const Rational& trunc, ExtendFn extend) {
    QSeries acc = QSeries::one(trunc);
    QSeries inv = QSeries::one(trunc);
    for (long n = 1; Rational(n * n) < trunc; ++n) {
        extend(inv, n);
        acc += inv.shifted(Rational(n * n));
    }
    return acc;
}

// omega/rho shape: sum_{n>=0} q^{2n(n+1)} / (factors up to level n).
template <typename ExtendFn>
QSeries omega_shape(const Rational& trunc, ExtendFn extend) {
    QSeries acc(1, trunc);
    QSeries inv = QSeries::one(trunc);
    for (long n = 0; Rational(2 * n * (n + 1)) < trunc; ++n) {
        extend(inv, n);
        acc += inv.shifted(Rational(2 * n * (n + 1)));
    }
    return acc;
}

} // namespace

QSeries mock_f(const Rational& trunc) {
    return eisenstein_shape(trunc, [](QSeries& inv, long n) {
        inv.div_binomial(Rational(n), +1);
        inv.div_binomial(Rational(n), +1);
    });
}

QSeries mock_phi(const Rational& trunc) {
    return eisenstein_shape(trunc,
                            [](QSeries& inv, long n) { inv.div_binomial(Rational(2 * n), +1); });
}

QSeries mock_chi(const Rational& trunc) {
    // 1/(1-q^n+q^{2n}) = (1+q^n)/(1+q^{3n})
    return eisenstein_shape(trunc, [](QSeries& inv, long n) {
        inv.mul_binomial(Rational(n), +1);
        inv.div_binomial(Rational(3 * n), +1);
    });
}

QSeries mock_omega(const Rational& trunc) {
    return omega_shape(trunc, [](QSeries& inv, long n) {
        inv.div_binomial(Rational(2 * n + 1), -1);
        inv.div_binomial(Rational(2 * n + 1), -1);
    });
}

QSeries mock_rho(const Rational& trunc) {
    // 1/(1+q^m+q^{2m}) = (1-q^m)/(1-q^{3m}), m = 2n+1
    return omega_shape(trunc, [](QSeries& inv, long n) {
        inv.mul_binomial(Rational(2 * n + 1), -1);
        inv.div_binomial(Rational(3 * (2 * n + 1)), -1);
    });
}

QSeries substitute_neg_q(const QSeries& s) {
    QSeries out(s.den(), s.trunc());
    for (const auto& [k, c] : s.terms()) {
        if (k % s.den() != 0) throw std::domain_error("substitute_neg_q: fractional exponent");
        long n = k / s.den();
        out.set(Rational(Int(k), Int(s.den())), n % 2 == 0 ? c : -c);
    }
    return out;
}

} // namespace umbral
