#include "umbral/jacobi.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace umbral {

namespace {

long isqrt_ceil(const Rational& x) {
    if (x.sign() <= 0) return 0;
    double d = std::sqrt(x.to_double());
    long r = long(d) + 2;
    while (Rational(r - 1) * Rational(r - 1) >= x) --r;
    return r;
}

} // namespace

// ---- SparseCycJ ------------------------------------------------------------

void SparseCycJ::add(const Rational& qexp, long wpow, const Cyclotomic& c) {
    if (!(qexp < qtrunc) || c.is_zero()) return;
    Int num = qexp.num() * qden;
    if (num % qexp.den() != 0) {
        long m = lcm(Int(qden), qexp.den()).convert_to<long>();
        long f = m / qden;
        std::map<std::pair<long, long>, Cyclotomic> nt;
        for (auto& [k, v] : terms) nt[{k.first * f, k.second}] = std::move(v);
        terms = std::move(nt);
        qden = m;
        num = qexp.num() * qden;
    }
    long key = num.convert_to<long>() / qexp.den().convert_to<long>();
    auto it = terms.find({key, wpow});
    if (it == terms.end())
        terms[{key, wpow}] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SparseCycJ SparseCycJ::operator*(const SparseCycJ& o) const {
    long m = lcm(Int(qden), Int(o.qden)).convert_to<long>();
    long fa = m / qden, fb = m / o.qden;
    Rational va = terms.empty() ? qtrunc : Rational(Int(terms.begin()->first.first), Int(qden));
    Rational vb =
        o.terms.empty() ? o.qtrunc : Rational(Int(o.terms.begin()->first.first), Int(o.qden));
    SparseCycJ out(m, std::min(qtrunc + vb, o.qtrunc + va));
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms) {
            long k = ka.first * fa + kb.first * fb;
            if (!(Rational(Int(k), Int(m)) < out.qtrunc)) continue;
            Cyclotomic prod = ca * cb;
            if (prod.is_zero()) continue;
            auto key = std::make_pair(k, ka.second + kb.second);
            auto it = out.terms.find(key);
            if (it == out.terms.end())
                out.terms[key] = std::move(prod);
            else {
                it->second += prod;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    return out;
}

SparseCycJ SparseCycJ::operator+(const SparseCycJ& o) const {
    long m = lcm(Int(qden), Int(o.qden)).convert_to<long>();
    SparseCycJ out(m, std::min(qtrunc, o.qtrunc));
    auto blend = [&](const SparseCycJ& s) {
        long f = m / s.qden;
        for (const auto& [k, c] : s.terms) {
            if (!(Rational(Int(k.first * f), Int(m)) < out.qtrunc)) continue;
            auto key = std::make_pair(k.first * f, k.second);
            auto it = out.terms.find(key);
            if (it == out.terms.end())
                out.terms[key] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    };
    blend(*this);
    blend(o);
    return out;
}

SparseCycJ SparseCycJ::scaled(const Cyclotomic& c) const {
    SparseCycJ out(qden, qtrunc);
    for (const auto& [k, v] : terms) {
        Cyclotomic p = v * c;
        if (!p.is_zero()) out.terms[k] = std::move(p);
    }
    return out;
}

JSeries SparseCycJ::demoted() const {
    JSeries out(qden, qtrunc);
    for (const auto& [k, c] : terms) {
        if (!c.is_rational())
            throw std::domain_error("SparseCycJ: coefficient fails to demote to rational");
        out.set_coeff(Rational(Int(k.first), Int(qden)), k.second, c.rational_part());
    }
    return out;
}

SparseCycJ theta_jacobi(int j, long s, long a, const Rational& rho, const Rational& qtrunc) {
    // theta_1(t,x) = -i sum (-1)^n q^{(2n+1)^2/8} e((n+1/2) x-part phases) u^{n+1/2}
    // theta_2 likewise without signs; theta_3/theta_4 over integer n.
    SparseCycJ out(1, qtrunc);
    auto phase = [&](long twok) { // e(twok * rho / 2)
        Rational ex = rho * Rational(twok, 2);
        return Cyclotomic::root_of_unity(ex.num().convert_to<long>(),
                                         ex.den().convert_to<long>());
    };
    Cyclotomic mi = Cyclotomic::root_of_unity(3, 4); // -i
    double td = std::max(0.0, qtrunc.to_double());
    if (j == 1 || j == 2) {
        long nb = long(std::sqrt(8.0 * td / double(s))) / 2 + 2;
        for (long n = -nb; n <= nb; ++n) {
            Rational e(s * (2 * n + 1) * (2 * n + 1), 8);
            if (!(e < qtrunc)) continue;
            Cyclotomic c = phase(2 * n + 1);
            if (j == 1) {
                c = c * mi;
                if (n % 2 != 0) c = -c;
            }
            out.add(e, a * (2 * n + 1), c);
        }
    } else {
        long nb = long(std::sqrt(2.0 * td / double(s))) + 2;
        for (long n = -nb; n <= nb; ++n) {
            Rational e(s * n * n, 2);
            if (!(e < qtrunc)) continue;
            Cyclotomic c = phase(2 * n);
            if (j == 4 && n % 2 != 0) c = -c;
            out.add(e, 2 * a * n, c);
        }
    }
    return out;
}

// ---- rational theta sums ----------------------------------------------------

JSeries theta_real(int j, long s, long a, const Rational& qtrunc) {
    JSeries out(8 * s, qtrunc);
    if (j == 1 || j == 2) {
        for (long n = 0;; ++n) {
            Rational e(s * (2 * n + 1) * (2 * n + 1), 8);
            if (!(e < qtrunc)) break;
            long sign = (j == 1 && n % 2 != 0) ? -1 : 1;
            out.set_coeff(e, a * (2 * n + 1), Rational(sign));
            // mirror term n -> -n-1: u-power -(2n+1)
            long msign = (j == 1) ? -sign : sign;
            Rational cur = out.coeff(e, -a * (2 * n + 1));
            out.set_coeff(e, -a * (2 * n + 1), cur + Rational(msign));
        }
    } else {
        out.set_coeff(Rational(0l), 0, Rational(1l));
        for (long n = 1;; ++n) {
            Rational e(s * n * n, 2);
            if (!(e < qtrunc)) break;
            Rational c(j == 4 && n % 2 != 0 ? -1 : 1);
            out.set_coeff(e, 2 * a * n, c);
            out.set_coeff(e, -2 * a * n, c);
        }
    }
    return out;
}

void divide_theta_real(JSeries& x, int j, long s, long a, long window) {
    // Product forms (w = u^{1/2}):
    // R1 = -q^{s/8} w^{-a} (1-w^{2a}) P1,  P1 = prod (1-w^{-2a}q^{sn})(1-w^{2a}q^{sn})(1-q^{sn})
    // R2 =  q^{s/8} w^{-a} (1+w^{2a}) P2,  P2 = prod (1+w^{-2a}q^{sn})(1+w^{2a}q^{sn})(1-q^{sn})
    // R3 =  prod (1+w^{-2a}q^{s(2n-1)/2})(1+w^{2a}q^{s(2n-1)/2})(1-q^{sn})
    // R4 =  same with minus signs on the w factors.
    Rational tspan = x.qtrunc() - x.qval(); // q-depth the factors must reach
    if (j == 1 || j == 2) {
        int sign = j == 1 ? -1 : 1;
        x = x.shifted(Rational(-s, 8), a, Rational(j == 1 ? -1 : 1));
        x.div_binom(Rational(0l), 2 * a, sign, window);
        for (long n = 1; !(Rational(s * n) >= tspan); ++n) {
            x.div_binom(Rational(s * n), -2 * a, sign, window);
            x.div_binom(Rational(s * n), 2 * a, sign, window);
            x.div_binom(Rational(s * n), 0, -1, window);
        }
    } else {
        int sign = j == 3 ? 1 : -1;
        for (long n = 1; !(Rational(s * (2 * n - 1), 2) >= tspan); ++n) {
            x.div_binom(Rational(s * (2 * n - 1), 2), -2 * a, sign, window);
            x.div_binom(Rational(s * (2 * n - 1), 2), 2 * a, sign, window);
        }
        for (long n = 1; !(Rational(s * n) >= tspan); ++n)
            x.div_binom(Rational(s * n), 0, -1, window);
    }
}

QSeries theta_at_zero(int j, long s, const Rational& qtrunc) {
    QSeries out(8 * s, qtrunc);
    if (j == 2) {
        for (long n = 0;; ++n) {
            Rational e(s * (2 * n + 1) * (2 * n + 1), 8);
            if (!(e < qtrunc)) break;
            out.add_to(e, Scalar(2));
        }
    } else if (j == 3 || j == 4) {
        out.add_to(Rational(0l), Scalar(1));
        for (long n = 1;; ++n) {
            Rational e(s * n * n, 2);
            if (!(e < qtrunc)) break;
            out.add_to(e, Scalar(j == 4 && n % 2 != 0 ? -2 : 2));
        }
    } else {
        throw std::domain_error("theta_at_zero: theta_1 vanishes at z=0");
    }
    return out;
}

JSeries theta_index(long m, long r, const Rational& qtrunc) {
    JSeries out(4 * m, qtrunc);
    long kb = isqrt_ceil(qtrunc * Rational(4 * m)) / (2 * m) + 2;
    for (long k = -kb; k <= kb; ++k) {
        long upow = 2 * m * k + r;
        Rational e(upow * upow, 4 * m);
        if (!(e < qtrunc)) continue;
        Rational cur = out.coeff(e, 2 * upow);
        out.set_coeff(e, 2 * upow, cur + Rational(1l));
    }
    return out;
}

JSeries theta_index_half_folded(long p, long two_r, const Rational& qtrunc) {
    // e(-r/2) theta_{p/2,r} = sum_k (-1)^k u^{pk+r} q^{(2pk+2r)^2/(8p)}, r = two_r/2.
    JSeries out(8 * p, qtrunc);
    long kb = isqrt_ceil(qtrunc * Rational(2 * p)) / p + 2;
    for (long k = -kb; k <= kb; ++k) {
        long wpow = 2 * p * k + two_r;
        Rational e(wpow * wpow, 8 * p);
        if (!(e < qtrunc)) continue;
        Rational cur = out.coeff(e, wpow);
        out.set_coeff(e, wpow, cur + Rational(k % 2 == 0 ? 1 : -1));
    }
    return out;
}

// ---- mu functions ------------------------------------------------------------

JSeries mu_m0(long m, bool half_shift, const Rational& qtrunc, long window) {
    JSeries out(1, qtrunc);
    long kb = isqrt_ceil(qtrunc * Rational(1l) / Rational(m)) + 2;
    for (long k = -kb; k <= kb; ++k) {
        Rational base(m * k * k);
        if (!(base < qtrunc)) continue;
        if (k == 0) {
            // (u+1)/(u-1) = -1 - 2u - 2u^2 - ...; at z+1/2: -1 + 2u - 2u^2 + ...
            URow row;
            row.lo = 0;
            row.cap = window;
            row.c.assign(size_t(window + 1), Rational());
            row.c[0] = Rational(-1l);
            for (long w = 2; w <= window; w += 2) {
                long jj = w / 2;
                long sgn = half_shift ? (jj % 2 ? 1 : -1) : -1;
                row.c[w] = Rational(2 * sgn);
            }
            JSeries piece(1, qtrunc);
            piece.rows_mut()[0] = std::move(row);
            out += piece;
        } else if (k > 0) {
            // u^{2km} q^{mk^2} * (-1 + sum_j 2 s^j u^j q^{jk}), s = -1 plain, +(-1)^{j-1} shifted
            JSeries piece(1, qtrunc);
            piece.set_coeff(base, 4 * k * m, Rational(-1l));
            for (long jj = 1;; ++jj) {
                Rational e = base + Rational(jj * k);
                if (!(e < qtrunc)) break;
                long sgn = half_shift ? (jj % 2 ? 1 : -1) : -1;
                piece.set_coeff(e, 4 * k * m + 2 * jj, Rational(2 * sgn));
            }
            out += piece;
        } else {
            JSeries piece(1, qtrunc);
            piece.set_coeff(base, 4 * k * m, Rational(1l));
            for (long jj = 1;; ++jj) {
                Rational e = base + Rational(jj * (-k));
                if (!(e < qtrunc)) break;
                long sgn = half_shift ? (jj % 2 ? -1 : 1) : 1;
                piece.set_coeff(e, 4 * k * m - 2 * jj, Rational(2 * sgn));
            }
            out += piece;
        }
    }
    return out;
}

JSeries mu_parity(long m, int parity, const Rational& qtrunc, long window) {
    JSeries a = mu_m0(m, false, qtrunc, window);
    JSeries b = mu_m0(m, true, qtrunc, window);
    JSeries s = parity % 2 == 0 ? a + b : a - b;
    return s.scaled(Rational(1, 2));
}

JSeries i_mu_half(long p, const Rational& qtrunc, long window) {
    // i*mu_{p/2,0} = -sum_k (-1)^k u^{pk+1/2} q^{(pk^2+k)/2} / (1-u q^k).
    JSeries out(2, qtrunc);
    long kb = isqrt_ceil(qtrunc * Rational(2, p)) + 2;
    for (long k = -kb; k <= kb; ++k) {
        Rational base(p * k * k + k, 2);
        if (!(base < qtrunc)) continue;
        long sgn = (k % 2 == 0) ? -1 : 1; // -(-1)^k
        if (k == 0) {
            URow row;
            row.lo = 1;
            row.cap = window;
            if (window >= 1) {
                row.c.assign(size_t(window), Rational());
                for (long w = 1; w <= window; w += 2) row.c[w - 1] = Rational(sgn);
            }
            JSeries piece(1, qtrunc);
            piece.rows_mut()[0] = std::move(row);
            out += piece;
        } else if (k > 0) {
            JSeries piece(1, qtrunc);
            for (long jj = 0;; ++jj) {
                Rational e = base + Rational(jj * k);
                if (!(e < qtrunc)) break;
                piece.set_coeff(e, 2 * p * k + 1 + 2 * jj, Rational(sgn));
            }
            out += piece;
        } else {
            // 1/(1-uq^k) = -sum_{j>=1} u^{-j} q^{-jk}
            JSeries piece(1, qtrunc);
            for (long jj = 1;; ++jj) {
                Rational e = base + Rational(jj * (-k));
                if (!(e < qtrunc)) break;
                piece.set_coeff(e, 2 * p * k + 1 - 2 * jj, Rational(-sgn));
            }
            out += piece;
        }
    }
    return out;
}

// ---- weight-one forms ---------------------------------------------------------

JSeries psi_univ_11(const Rational& qtrunc, long window) {
    // -i theta1(2z) eta^3 / theta1(z)^2 = R(2z) eta^3 / R(z)^2.
    JSeries x = theta_real(1, 1, 2, qtrunc + Rational(1l));
    x = x.times_qseries(eta_quotient({{1, 3}}, qtrunc + Rational(1l)));
    divide_theta_real(x, 1, 1, 1, window);
    divide_theta_real(x, 1, 1, 1, window);
    return x.qtruncated(qtrunc);
}

JSeries psi_univ_1mh(const Rational& qtrunc, long window) {
    // -i eta^3/theta1(z) = eta^3 / R(z).
    JSeries x = JSeries::j_monomial(Rational(0l), 0, Rational(1l), qtrunc + Rational(1l));
    x = x.times_qseries(eta_quotient({{1, 3}}, qtrunc + Rational(1l)));
    divide_theta_real(x, 1, 1, 1, window);
    return x.qtruncated(qtrunc);
}

namespace {

long phi_support_bound(long index, const Rational& qexp) {
    if (qexp.sign() < 0) return 2 * index;
    // j^2 <= 4*index*n + index^2  (weak Jacobi form of index `index`)
    return 2 * isqrt_ceil(Rational(4 * index) * qexp + Rational(index * index) + Rational(1l));
}

JSeries phi_quotient(long za, long zb, const Rational& qtrunc, long window) {
    // theta1(tau, za*z)/theta1(tau, zb*z)
    JSeries x = theta_real(1, 1, za, qtrunc + Rational(2l));
    divide_theta_real(x, 1, 1, zb, window);
    return x.qtruncated(qtrunc); // the -i prefactors cancel in the quotient
}

} // namespace

JSeries phi18_combo(const Rational& qtrunc, long window);

JSeries phi_ladder(long m, long k, const Rational& qtrunc, long window) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, JSeries> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({m, k});
        if (it != memo.end() && !(it->second.qtrunc() < qtrunc)) return it->second.qtruncated(qtrunc);
    }
    JSeries out;
    auto P = [&](long mm, long kk) { return phi_ladder(mm, kk, qtrunc, window); };
    if (k == 1 && m == 2) {
        // 4 * sum_j theta_j(z)^2/theta_j(0)^2
        out = JSeries(1, qtrunc);
        for (int j : {2, 3, 4}) {
            JSeries t = theta_real(j, 1, 1, qtrunc);
            t = t * t;
            QSeries z = theta_at_zero(j, 1, qtrunc + Rational(1l));
            t = t.times_qseries(qs_div(QSeries::one(qtrunc + Rational(1l)), z * z));
            out += t;
        }
        out = out.scaled(Rational(4l));
    } else if (k == 1 && m == 3) {
        out = JSeries(1, qtrunc);
        int pairs[3][2] = {{3, 4}, {4, 2}, {2, 3}};
        for (auto& pr : pairs) {
            JSeries acc = JSeries::j_monomial(Rational(0l), 0, Rational(1l), qtrunc);
            for (int idx = 0; idx < 2; ++idx) {
                int j = pr[idx];
                JSeries t = theta_real(j, 1, 1, qtrunc);
                t = t * t;
                QSeries z = theta_at_zero(j, 1, qtrunc + Rational(1l));
                t = t.times_qseries(qs_div(QSeries::one(qtrunc + Rational(1l)), z * z));
                acc = acc * t;
            }
            out += acc;
        }
        out = out.scaled(Rational(2l));
    } else if (k == 1 && m == 4) {
        // theta1(2z)^2/theta1(z)^2
        JSeries x = theta_real(1, 1, 2, qtrunc + Rational(2l));
        x = x * x;
        divide_theta_real(x, 1, 1, 1, window);
        divide_theta_real(x, 1, 1, 1, window);
        out = x.qtruncated(qtrunc);
    } else if (k == 1 && m == 5) {
        out = phi_quotient(3, 1, qtrunc, window);
    } else if (k == 1 && m == 7) {
        out = phi_quotient(4, 2, qtrunc, window);
    } else if (k == 1 && m == 13) {
        JSeries x = theta_real(1, 1, 1, qtrunc + Rational(2l)) *
                    theta_real(1, 1, 6, qtrunc + Rational(2l));
        divide_theta_real(x, 1, 1, 2, window);
        divide_theta_real(x, 1, 1, 3, window);
        out = x.qtruncated(qtrunc);
    } else if (k == 1 && m == 6) {
        out = P(2, 1) * P(5, 1) - P(3, 1) * P(4, 1);
    } else if (m == 8 && k == 1) {
        out = P(3, 1) * P(6, 1) - (P(4, 1) * P(5, 1)).scaled(Rational(5l));
    } else if (m == 8 && k == 2) {
        out = P(4, 1) * P(5, 1) - P(8, 1);
    } else if (m == 9 && k == 1) {
        out = P(3, 1) * P(7, 1) - P(5, 1) * P(5, 1);
    } else if (m == 9 && k == 2) {
        out = P(4, 1) * P(6, 1) - (P(5, 1) * P(5, 1)).scaled(Rational(4l)) -
              P(9, 1).scaled(Rational(4l));
    } else if (m == 10 && k == 1) {
        out = (P(4, 1) * P(7, 1)).scaled(Rational(5l)) - P(5, 1) * P(6, 1);
    } else if (m == 11 && k == 1) {
        out = (P(5, 1) * P(7, 1)).scaled(Rational(3l)) + (P(3, 1) * P(9, 1)).scaled(Rational(2l)) -
              P(4, 1) * P(8, 1);
    } else if (m == 12 && k == 1) {
        out = (P(3, 1) * P(10, 1)).scaled(Rational(3l)) -
              (P(4, 1) * P(9, 1)).scaled(Rational(8l)) + P(5, 1) * P(8, 1);
    } else if (m == 12 && k == 2) {
        out = (P(4, 1) * P(9, 1)).scaled(Rational(4l)) - P(5, 1) * P(8, 1) - P(12, 1);
    } else if (m == 12 && k == 3) {
        out = P(4, 1) * P(9, 2);
    } else if (m == 14 && k == 1) {
        out = (P(5, 1) * P(10, 1)).scaled(Rational(3l)) + P(3, 1) * P(12, 1) -
              (P(4, 1) * P(11, 1)).scaled(Rational(4l));
    } else if (m == 15 && k == 1) {
        out = P(5, 1) * P(11, 1) + (P(3, 1) * P(13, 1)).scaled(Rational(6l)) -
              P(4, 1) * P(12, 1);
    } else if (m == 15 && k == 2) {
        out = P(4, 1) * P(12, 1) - (P(5, 1) * P(11, 1)).scaled(Rational(2l)) -
              P(15, 1).scaled(Rational(2l));
    } else if (m == 16 && k == 1) {
        out = (P(4, 1) * P(13, 1)).scaled(Rational(8l)) - P(5, 1) * P(12, 1) +
              P(7, 1) * P(10, 1);
    } else if (m == 16 && k == 2) {
        out = (P(4, 1) * P(13, 1)).scaled(Rational(12l)) - P(5, 1) * P(12, 1) -
              P(16, 1).scaled(Rational(3l));
    } else if (m == 17 && k == 1) {
        out = (P(5, 1) * P(13, 1)).scaled(Rational(4l)) - P(9, 1) * P(9, 1);
    } else if (m == 18 && k == 1) {
        out = P(5, 1) * P(14, 1) + (P(3, 1) * P(16, 1)).scaled(Rational(3l)) -
              (P(4, 1) * P(15, 1)).scaled(Rational(4l));
    } else if (m == 18 && k == 3) {
        out = P(4, 1) * P(15, 2);
    } else if (m == 19 && k == 1) {
        out = P(4, 1) * P(16, 1) + (P(7, 1) * P(13, 1)).scaled(Rational(2l)) -
              P(5, 1) * P(15, 1);
    } else if (m == 21 && k == 1) {
        out = P(5, 1) * P(17, 1) - (P(9, 1) * P(13, 1)).scaled(Rational(2l));
    } else if (m == 25 && k == 1) {
        out = (P(5, 1) * P(21, 1)).scaled(Rational(1, 2)) - P(7, 1) * P(19, 1) +
              (P(13, 1) * P(13, 1)).scaled(Rational(1, 2));
    } else {
        throw std::domain_error("UndefinedLadderEntry: phi^(" + std::to_string(m) + ")_" +
                                std::to_string(k));
    }
    long idx = m - 1;
    out.trim_certify([idx](const Rational& e) { return phi_support_bound(idx, e); }, 4);
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({m, k});
    if (it == memo.end() || it->second.qtrunc() < out.qtrunc()) memo[{m, k}] = out;
    return out;
}

JSeries phi18_combo(const Rational& qtrunc, long window) {
    // (1/12)(phi18_1 + phi18_3/3 + 4 theta1^12/eta^12 (phi12_1 + 2 phi12_2 + phi12_3/3))
    JSeries a = phi_ladder(18, 1, qtrunc, window);
    JSeries b = phi_ladder(18, 3, qtrunc, window);
    JSeries t12 = theta_real(1, 1, 1, qtrunc + Rational(1l));
    JSeries t = t12;
    for (int i = 1; i < 12; ++i) t = t * t12;
    t = t.times_qseries(eta_quotient({{1, -12}}, qtrunc + Rational(1l))).qtruncated(qtrunc);
    t.trim_certify([](const Rational& e) { return phi_support_bound(6, e); }, 4);
    JSeries c = phi_ladder(12, 1, qtrunc, window) +
                phi_ladder(12, 2, qtrunc, window).scaled(Rational(2l)) +
                phi_ladder(12, 3, qtrunc, window).scaled(Rational(1, 3));
    JSeries out = a + b.scaled(Rational(1, 3)) + (t * c).scaled(Rational(4l));
    return out.scaled(Rational(1, 12));
}

// ---- psi tables ----------------------------------------------------------------

namespace {

struct ThetaPow {
    int j;
    long s, a;
    long e; // power, sign gives numerator/denominator
};

struct BracketTerm {
    long coeff_num = 1; // rational scalar coeff_num (integer here)
    std::vector<std::array<long, 4>> factors; // (j, s, a, rho as num/den packed below)
    std::vector<Rational> rhos;
};

// Evaluates scalar * i^{ipow} * prod(thetas) * prod(eta) * [bracket sum].
JSeries eval_expr(Rational scalar, long ipow, const std::vector<ThetaPow>& thetas,
                  const std::vector<std::pair<long, long>>& etas,
                  const std::vector<std::pair<Cyclotomic, std::vector<std::tuple<int, long, long, Rational>>>>& bracket,
                  const Rational& qtrunc, long window) {
    Rational slack(3l);
    Rational t = qtrunc + slack;
    JSeries acc;
    bool have = false;
    // theta_1 real-form foldings contribute i-powers in either direction.
    for (const auto& tp : thetas)
        if (tp.j == 1) ipow += 3 * tp.e;
    ipow = ((ipow % 4) + 4) % 4;
    // Bracket part (sparse cyclotomic, demoted after folding the net i-power).
    if (!bracket.empty()) {
        Cyclotomic fold = Cyclotomic::root_of_unity(ipow, 4);
        ipow = 0;
        SparseCycJ sum(1, t);
        for (const auto& [coef, factors] : bracket) {
            SparseCycJ prod(1, t);
            prod.add(Rational(0l), 0, coef * fold);
            for (const auto& [j, s, a, rho] : factors) prod = prod * theta_jacobi(j, s, a, rho, t);
            sum = sum + prod;
        }
        acc = sum.demoted();
        have = true;
    }
    // Numerator thetas (real forms).
    for (const auto& tp : thetas) {
        if (tp.e <= 0) continue;
        for (long i = 0; i < tp.e; ++i) {
            JSeries r = theta_real(tp.j, tp.s, tp.a, t);
            acc = have ? acc * r : r;
            have = true;
        }
    }
    if (!have) acc = JSeries::j_monomial(Rational(0l), 0, Rational(1l), t);
    // Denominators.
    for (const auto& tp : thetas) {
        if (tp.e >= 0) continue;
        for (long i = 0; i < -tp.e; ++i) divide_theta_real(acc, tp.j, tp.s, tp.a, window);
    }
    if (!etas.empty()) acc = acc.times_qseries(eta_quotient(etas, t));
    ipow = ((ipow % 4) + 4) % 4;
    if (ipow == 2) scalar = -scalar;
    else if (ipow != 0)
        throw std::logic_error("eval_expr: residual imaginary scalar");
    return acc.scaled(scalar).qtruncated(qtrunc);
}

using BracketList =
    std::vector<std::pair<Cyclotomic, std::vector<std::tuple<int, long, long, Rational>>>>;

Cyclotomic imag_unit(long p) { return Cyclotomic::root_of_unity(((p % 4) + 4) % 4, 4); }

} // namespace

JSeries psi_table(const std::string& ell, const std::string& cls, const Rational& qtrunc,
                  long window) {
    auto E = [&](Rational sc, long ip, std::vector<ThetaPow> th,
                 std::vector<std::pair<long, long>> et, BracketList br = {}) {
        return eval_expr(std::move(sc), ip, th, et, br, qtrunc, window);
    };
    Rational R2(2l), Rm2(-2l), R1(1l), Rm1(-1l);
    if (ell == "4") {
        if (cls == "1A") return E(R2, 1, {{1, 1, 2, 3}, {1, 1, 1, -4}}, {{1, 3}});
        if (cls == "2A") return E(R2, 1, {{1, 1, 2, 3}, {2, 1, 1, -4}}, {{1, 3}});
        if (cls == "2B") return E(Rm2, 1, {{1, 1, 2, 3}, {1, 1, 1, -2}, {2, 1, 1, -2}}, {{1, 3}});
        if (cls == "4A")
            return E(Rm2, 1, {{1, 1, 2, 1}, {2, 1, 2, 2}, {2, 2, 2, -2}}, {{2, 2}, {1, -1}});
        if (cls == "4B")
            return E(Rm2, 1, {{1, 2, 2, 1}, {3, 2, 2, 2}, {4, 2, 2, 1}},
                     {{2, 2}, {1, -2}, {4, -2}});
        if (cls == "2C")
            return E(R2, 1, {{1, 1, 2, 1}, {2, 1, 2, 2}, {1, 1, 1, -2}, {2, 1, 1, -2}}, {{1, 3}});
        if (cls == "3A")
            return E(R2, 1, {{1, 3, 6, 1}, {1, 1, 1, -1}, {1, 3, 3, -1}}, {{1, 3}});
        if (cls == "6A")
            return E(Rm2, 1, {{1, 3, 6, 1}, {2, 1, 1, -1}, {2, 3, 3, -1}}, {{1, 3}});
        if (cls == "8A")
            return E(Rm2, 1, {{1, 1, 2, 1}, {2, 2, 4, 1}, {2, 4, 4, -1}},
                     {{1, 1}, {4, 1}, {2, -1}});
        if (cls == "4C")
            return E(R2, 1, {{1, 1, 2, 1}, {2, 2, 4, 1}, {1, 2, 2, -2}},
                     {{2, 7}, {1, -3}, {4, -2}});
        if (cls == "6B" || cls == "6C" || cls == "6BC") {
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 1, Rational(1, 3)}, {1, 1, 1, Rational(1, 6)}}},
                {Cyclotomic(Rational(-1l)), {{1, 1, 1, Rational(-1, 3)}, {1, 1, 1, Rational(-1, 6)}}}};
            return E(R1, 3, {{1, 3, 6, 1}, {1, 3, 3, -1}, {2, 3, 3, -1}}, {{3, 1}}, br);
        }
        if (cls == "7A" || cls == "7B" || cls == "7AB") {
            BracketList br;
            for (int sgn : {1, -1}) {
                std::vector<std::tuple<int, long, long, Rational>> fs;
                for (long j = 1; j <= 3; ++j) {
                    fs.emplace_back(1, 1, 2, Rational(sgn * j * j, 7));
                    fs.emplace_back(1, 1, 1, Rational(-sgn * j * j, 7));
                }
                br.emplace_back(Cyclotomic(Rational(1l)), std::move(fs));
            }
            return E(R1, 3, {{1, 7, 7, -1}}, {{7, 1}, {1, -4}}, br); // scalar -i
        }
        if (cls == "14A" || cls == "14B" || cls == "14AB") {
            BracketList br;
            for (int sgn : {1, -1}) {
                std::vector<std::tuple<int, long, long, Rational>> fs;
                for (long j = 1; j <= 3; ++j) {
                    fs.emplace_back(1, 1, 2, Rational(sgn * j * j, 7));
                    fs.emplace_back(2, 1, 1, Rational(-sgn * j * j, 7));
                }
                br.emplace_back(Cyclotomic(Rational(1l)), std::move(fs));
            }
            return E(R1, 1, {{2, 7, 7, -1}}, {{7, 1}, {1, -4}}, br); // scalar +i

        }
    }
    if (ell == "5") {
        if (cls == "1A") return E(R2, 1, {{1, 1, 2, 1}, {1, 1, 3, 1}, {1, 1, 1, -3}}, {{1, 3}});
        if (cls == "2A") return E(Rm2, 1, {{1, 1, 2, 1}, {2, 1, 3, 1}, {2, 1, 1, -3}}, {{1, 3}});
        if (cls == "2B")
            return E(Rm2, 1, {{1, 1, 2, 1}, {1, 1, 3, 1}, {1, 1, 1, -1}, {2, 1, 1, -2}}, {{1, 3}});
        if (cls == "2C")
            return E(R2, 1, {{1, 1, 2, 1}, {2, 1, 3, 1}, {1, 1, 1, -2}, {2, 1, 1, -1}}, {{1, 3}});
        if (cls == "3A")
            return E(Rm2, 1, {{1, 1, 2, 1}, {1, 1, 3, 1}, {1, 3, 3, -1}}, {{3, 1}});
        if (cls == "6A")
            return E(Rm2, 1, {{1, 1, 2, 1}, {2, 1, 3, 1}, {2, 3, 3, -1}}, {{3, 1}});
        if (cls == "4A" || cls == "4B" || cls == "4AB") {
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 1, Rational(1, 4)}, {1, 1, 3, Rational(1, 4)}}},
                {Cyclotomic(Rational(-1l)), {{1, 1, 1, Rational(-1, 4)}, {1, 1, 3, Rational(-1, 4)}}}};
            return E(R1, 3, {{2, 1, 2, 1}, {2, 2, 2, -2}}, {{2, 2}, {1, -1}}, br);
        }
        if (cls == "4C" || cls == "4D" || cls == "4CD") {
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 1, Rational(1, 4)}, {1, 1, 3, Rational(-1, 4)}}},
                {Cyclotomic(Rational(1l)), {{1, 1, 1, Rational(-1, 4)}, {1, 1, 3, Rational(1, 4)}}}};
            return E(R1, 3, {{2, 1, 2, 1}, {1, 2, 2, -1}, {2, 2, 2, -1}}, {{2, 2}, {1, -1}}, br);
        }
        if (cls == "12A" || cls == "12B" || cls == "12AB") {
            BracketList br = {
                {Cyclotomic(Rational(1l)),
                 {{1, 1, 1, Rational(1, 12)},
                  {1, 1, 1, Rational(1, 4)},
                  {1, 1, 1, Rational(5, 12)},
                  {1, 1, 3, Rational(-1, 4)}}},
                {Cyclotomic(Rational(-1l)),
                 {{1, 1, 1, Rational(-1, 12)},
                  {1, 1, 1, Rational(-1, 4)},
                  {1, 1, 1, Rational(-5, 12)},
                  {1, 1, 3, Rational(1, 4)}}}};
            return E(R1, 1, {{2, 1, 2, 1}, {2, 6, 6, -1}}, {{6, 1}, {1, -3}}, br);
        }
    }
    if (ell == "7") {
        if (cls == "1A") return E(R2, 1, {{1, 1, 4, 1}, {1, 1, 1, -2}}, {{1, 3}});
        if (cls == "2A") return E(Rm2, 1, {{1, 1, 4, 1}, {2, 1, 1, -2}}, {{1, 3}});
        if (cls == "4A")
            return E(Rm2, 1, {{1, 1, 4, 1}, {2, 2, 2, -1}}, {{2, 1}, {1, 1}});
        if (cls == "3A" || cls == "3B" || cls == "3AB") {
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 4, Rational(1, 3)}, {1, 1, 1, Rational(-1, 3)}}},
                {Cyclotomic(Rational(1l)), {{1, 1, 4, Rational(-1, 3)}, {1, 1, 1, Rational(1, 3)}}}};
            return E(R1, 3, {{1, 3, 3, -1}}, {{3, 1}}, br);
        }
        if (cls == "6A" || cls == "6B" || cls == "6AB") {
            // printed bracket does not vanish at the theta2(3t,3z) poles
            // z = 1/6, 5/6; the central twist psi_{3A}(z+1/2) fixes the shifts.
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 4, Rational(1, 3)}, {1, 1, 1, Rational(1, 6)}}},
                {Cyclotomic(Rational(-1l)), {{1, 1, 4, Rational(-1, 3)}, {1, 1, 1, Rational(-1, 6)}}}};
            return E(R1, 3, {{2, 3, 3, -1}}, {{3, 1}}, br);
        }
    }
    if (ell == "13") {
        if (cls == "1A")
            return E(R2, 1, {{1, 1, 6, 1}, {1, 1, 1, -1}, {1, 1, 3, -1}}, {{1, 3}});
        if (cls == "2A")
            return E(Rm2, 1, {{1, 1, 6, 1}, {2, 1, 1, -1}, {2, 1, 3, -1}}, {{1, 3}});
        if (cls == "4A" || cls == "4B" || cls == "4AB") {
            BracketList br = {
                {Cyclotomic(Rational(1l)), {{1, 1, 1, Rational(1, 4)}, {1, 1, 3, Rational(1, 4)}}},
                {Cyclotomic(Rational(-1l)), {{1, 1, 1, Rational(-1, 4)}, {1, 1, 3, Rational(-1, 4)}}}};
            return E(R1, 3, {{2, 1, 6, 1}, {2, 2, 2, -1}, {2, 2, 6, -1}}, {{2, 2}, {1, -1}}, br);
        }
    }
    if (ell == "10+5") {
        if (cls == "1A") return E(R2, 1, {{1, 1, 2, 2}, {1, 1, 1, -3}}, {{1, 3}});
        if (cls == "2A")
            return E(Rm2, 1, {{1, 1, 2, 2}, {1, 1, 1, -1}, {2, 1, 1, -2}}, {{1, 3}});
        if (cls == "3A")
            return E(R2, 1, {{1, 3, 6, 1}, {1, 1, 2, -1}, {1, 3, 3, -1}}, {{1, 3}});
        if (cls == "2B")
            return E(R2, 1, {{1, 1, 2, 1}, {2, 1, 2, 1}, {1, 1, 1, -2}, {2, 1, 1, -1}}, {{1, 3}});
        if (cls == "4A")
            // printed entry lacks a theta2(tau,z) denominator (index 3 != 5/2)
            return E(Rm2, 1, {{1, 1, 2, 1}, {2, 1, 2, 1}, {2, 2, 2, -1}, {2, 1, 1, -1}},
                     {{1, 1}, {2, 1}});
    }
    if (ell == "14+7") {
        if (cls == "1A") return E(R2, 1, {{1, 1, 3, 1}, {1, 1, 1, -2}}, {{1, 3}});
        if (cls == "2A")
            return E(R2, 1, {{2, 1, 3, 1}, {1, 1, 1, -1}, {2, 1, 1, -1}}, {{1, 3}});
        if (cls == "3A")
            return E(Rm2, 1, {{1, 1, 1, 1}, {1, 1, 3, 1}, {1, 3, 3, -1}}, {{3, 1}});
    }
    if (ell == "22+11") {
        if (cls == "1A")
            return E(R2, 1, {{1, 1, 4, 1}, {1, 1, 1, -1}, {1, 1, 2, -1}}, {{1, 3}});
        if (cls == "2A")
            return E(Rm2, 1, {{1, 1, 4, 1}, {2, 1, 1, -1}, {2, 1, 2, -1}}, {{1, 3}});
    }
    if (ell == "46+23") {
        if (cls == "1A")
            return E(R2, 1, {{1, 1, 6, 1}, {1, 1, 2, -1}, {1, 1, 3, -1}}, {{1, 3}});
    }
    throw std::domain_error("NotTabulated: psi^(" + ell + ")_" + cls);
}

// ---- decomposition ---------------------------------------------------------

long default_window(const Rational& index, const Rational& qtrunc, long slope) {
    long inner = 2 * isqrt_ceil(Rational(4l) * index * qtrunc + Rational(4l)) + 8;
    Rational shrink = Rational(slope) * qtrunc;
    return inner + shrink.num().convert_to<long>() / shrink.den().convert_to<long>() + 24;
}

Decomposition decompose(const JSeries& psi, const Rational& index, const PolarSpec& polar,
                        long window) {
    JSeries total = psi;
    Rational t = psi.qtrunc();
    bool half = !index.is_integer();
    if (half) {
        long p = (index * Rational(2l)).num().convert_to<long>();
        if (!polar.half.is_zero()) total += i_mu_half(p, t, window).scaled(polar.half);
    } else {
        long m = index.num().convert_to<long>();
        if (!polar.even.is_zero()) total += mu_parity(m, 0, t, window).scaled(polar.even);
        if (!polar.odd.is_zero()) total += mu_parity(m, 1, t, window).scaled(polar.odd);
    }
    // Residual check + trim: theta coefficients of a weak Jacobi form of
    // index m satisfy val(h_r) >= -r^2/4m, so the u-support at exponent e is
    // bounded by j^2 <= 4m e + m^2; in w-units w^2 <= 16 m e + 4 m^2.
    Rational idx = index;
    total.trim_certify(
        [idx](const Rational& e) {
            Rational b = Rational(16l) * idx * e + Rational(4l) * idx * idx + Rational(4l);
            if (b.sign() <= 0) return 2L;
            return isqrt_ceil(b);
        },
        4);
    Decomposition out;
    out.index = index;
    if (half) {
        long p = (index * Rational(2l)).num().convert_to<long>();
        for (long tr = 1; tr <= 2 * p - 1; tr += 2) {
            QSeries col = total.column(tr);
            out.H[tr] = col.shifted(Rational(-tr * tr, 8 * p));
        }
    } else {
        long m = index.num().convert_to<long>();
        for (long r = 1; r <= m; ++r) {
            QSeries col = total.column(2 * r);
            out.H[r] = col.shifted(Rational(-r * r, 4 * m));
        }
    }
    return out;
}

JSeries recompose(const Decomposition& d, const PolarSpec& polar, const Rational& qtrunc,
                  long window) {
    bool half = !d.index.is_integer();
    JSeries acc(1, qtrunc);
    if (half) {
        long p = (d.index * Rational(2l)).num().convert_to<long>();
        for (const auto& [tr, H] : d.H) {
            JSeries th = theta_index_half_folded(p, tr, qtrunc + Rational(2l));
            acc += th.times_qseries(H).qtruncated(qtrunc);
        }
        if (!polar.half.is_zero()) acc -= i_mu_half(p, qtrunc, window).scaled(polar.half);
    } else {
        long m = d.index.num().convert_to<long>();
        for (const auto& [r, H] : d.H) {
            JSeries th = theta_index(m, r, qtrunc + Rational(2l));
            if (r < m) th -= theta_index(m, -r, qtrunc + Rational(2l));
            acc += th.times_qseries(H).qtruncated(qtrunc);
        }
        if (!polar.even.is_zero()) acc -= mu_parity(m, 0, qtrunc, window).scaled(polar.even);
        if (!polar.odd.is_zero()) acc -= mu_parity(m, 1, qtrunc, window).scaled(polar.odd);
    }
    return acc;
}

} // namespace umbral
