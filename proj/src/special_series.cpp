#include "umbral/qseries.hpp"
#include <cmath>

namespace umbral {

Rational sigma1(const Rational& n) {
    if (!n.is_integer() || n.sign() <= 0) return Rational(0l);
    return Rational(sigma1_int(n.num().convert_to<long>()));
}

Int sigma1_int(long n) {
    if (n <= 0) return 0;
    Int s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += d;
        if (d != n / d) s += n / d;
    }
    return s;
}

QSeries eta_quotient(const std::vector<std::pair<long, long>>& spec, const Rational& trunc) {
    // Leading exponent sum e_i s_i / 24; binomial factors (1 - q^{s n})^{e}.
    Rational lead(0l);
    for (auto [s, e] : spec) lead += Rational(s * e, 24);
    QSeries out = QSeries::monomial(lead, Scalar(1), trunc);
    for (auto [s, e] : spec) {
        if (s <= 0) throw std::domain_error("eta_quotient: scale must be positive");
        // (1 - q^{sn})^e for n = 1.. while exponents stay below trunc relative to valuation.
        for (long n = 1;; ++n) {
            Rational step(s * n);
            if (!(lead + step < trunc)) break;
            for (long i = 0; i < std::abs(e); ++i) {
                if (e > 0)
                    out.mul_binomial(step, -1);
                else
                    out.div_binomial(step, -1);
            }
        }
    }
    return out;
}

QSeries lambda_M(long M, const Rational& trunc) {
    if (M < 2) throw std::domain_error("lambda_M: M must be >= 2");
    QSeries out(1, trunc);
    out.set(Rational(0l), Scalar(Rational(M * (M - 1), 24)));
    for (long k = 1; Rational(k) < trunc; ++k) {
        Int c = Int(M) * sigma1_int(k);
        if (k % M == 0) c -= Int(M) * M * sigma1_int(k / M);
        out.add_to(Rational(k), Scalar(Rational(c)));
    }
    return out;
}

QSeries e2(const Rational& trunc) {
    QSeries out(1, trunc);
    out.set(Rational(0l), Scalar(1));
    for (long n = 1; Rational(n) < trunc; ++n)
        out.set(Rational(n), Scalar(Rational(Int(-24) * sigma1_int(n))));
    return out;
}

QSeries unary_theta(const Rational& m, const Rational& r, ThetaMode mode, const Rational& trunc) {
    bool half = !m.is_integer();
    if (half) {
        if ((m * Rational(2l)).den() != 1 || r.is_integer() || (r * Rational(2l)).den() != 1)
            throw std::domain_error("unary_theta: half-integral m needs r in Z+1/2");
    } else if (!r.is_integer()) {
        throw std::domain_error("unary_theta: integral m needs integral r");
    }
    long d = half ? 8 * (m * Rational(2l)).num().convert_to<long>() // (2pk+s)^2/8p grid
                  : 4 * m.num().convert_to<long>();
    QSeries out(d, trunc);
    // |2mk + r| <= sqrt(4m * trunc) bounds |k|.
    double bound = std::max(0.0, (Rational(4l) * m * trunc).to_double());
    long kmax = long((std::sqrt(bound) + r.abs().to_double()) / (2 * m.to_double())) + 2;
    for (long k = -kmax; k <= kmax; ++k) {
        Rational a = Rational(2l) * m * Rational(k) + r;
        Rational e = a * a / (Rational(4l) * m);
        if (!(e < trunc)) continue;
        Scalar phase(1);
        if (half) {
            // e(mk + r/2) = e((2pk + s)/4) with m = p/2, r = s/2.
            long p = (m * Rational(2l)).num().convert_to<long>();
            long s = (r * Rational(2l)).num().convert_to<long>();
            phase = Scalar(Cyclotomic::root_of_unity(2 * p * k + s, 4));
        }
        Scalar coeff = mode == ThetaMode::S ? Scalar(a) * phase : phase;
        out.add_to(e, coeff);
    }
    return out;
}

} // namespace umbral
