#include "umbral/holproj.hpp"

#include "umbral/mocktheta.hpp"

#include <nlohmann/json.hpp>

namespace umbral {

bool ThetaDecompSpec::empty() const {
    for (const auto& [c, rho] : parts)
        if (!c.is_zero()) return false;
    return true;
}

ThetaDecompSpec shadow_spec(const std::string& X, const std::string& cls, long r) {
    const GroupTable& G = GroupTable::load(X);
    const TwistedEuler& te = G.twisted(cls);
    long m = G.root_system().coxeter;
    ThetaDecompSpec spec;
    spec.M = m;
    long rr = ((r % (2 * m)) + 2 * m) % (2 * m);
    int sign = 1;
    if (rr > m) {
        rr = 2 * m - rr;
        sign = -1;
    }
    if (rr == 0 || rr == m) return spec;
    auto add = [&](long c, long rho) {
        if (c != 0) spec.parts.emplace_back(Rational(sign * c), rho);
    };
    if (G.root_system().has_type('A'))
        add(rr % 2 == 0 ? te.chiA.value() : te.chiA_bar.value(), rr);
    if (G.root_system().has_type('D')) {
        if (m == 6) {
            if (rr % 2 == 1) {
                if (rr % 6 == 3) {
                    add(te.chiD_check.value(), rr);
                } else {
                    add(te.chiD_bar.value(), rr);
                    add(te.chiD.value(), 6 - rr);
                }
            }
        } else if (m % 4 == 2) {
            if (rr % 2 == 1) {
                add(te.chiD_bar.value(), rr);
                add(te.chiD.value(), m - rr);
            }
        } else {
            if (rr % 2 == 0)
                add(te.chiD.value(), m - rr);
            else
                add(te.chiD_bar.value(), rr);
        }
    }
    if (G.root_system().has_type('E')) {
        long cb = te.chiE_bar.value();
        auto add_set = [&](long c, std::initializer_list<long> rhos) {
            for (long rho : rhos) add(c, rho);
        };
        if (m == 12) {
            if (rr == 1 || rr == 7) add_set(cb, {1, 7});
            else if (rr == 5 || rr == 11) add_set(cb, {5, 11});
            else if (rr == 4 || rr == 8) add_set(te.chiE.value(), {4, 8});
        } else if (m == 18) {
            if (rr == 1 || rr == 5 || rr == 7 || rr == 11 || rr == 13 || rr == 17)
                add_set(cb, {rr, 18 - rr});
            else if (rr == 3 || rr == 15) add(cb, 9);
            else if (rr == 9) add_set(cb, {3, 9, 15});
        } else if (m == 30) {
            if (rr == 1 || rr == 11 || rr == 19 || rr == 29) add_set(cb, {1, 11, 19, 29});
            else if (rr == 7 || rr == 13 || rr == 17 || rr == 23) add_set(cb, {7, 13, 17, 23});
        }
    }
    return spec;
}

Rational d_weight(const Rational& N, const Rational& Nt, const Rational& t, const Rational& tt) {
    auto sgnp = [](const Rational& x) { return Rational(x.sign() == 0 ? 1 : x.sign()); };
    return sgnp(N) * sgnp(Nt) * ((N + t).abs() - (Nt + tt).abs());
}

namespace {

// phi_rho(l) = +1 if l = rho, -1 if l = -rho (mod 2M), else 0.
int phi_sign(long ell, long rho, long twoM) {
    long a = ((ell - rho) % twoM + twoM) % twoM;
    long b = ((ell + rho) % twoM + twoM) % twoM;
    if (a == 0 && b == 0) return 0; // rho = -rho mod 2M: odd function vanishes
    if (a == 0) return 1;
    if (b == 0) return -1;
    return 0;
}

// sum over m,n>0 with m^2-n^2=N of phi_a(m) phi_b(n) (m-n), for one N.
Rational correction_coeff(long N, const ThetaDecompSpec& f, const ThetaDecompSpec& g) {
    Rational acc;
    long twoM = 2 * f.M;
    for (long d = 1; d * d < N; ++d) {
        if (N % d != 0) continue;
        long e = N / d;
        if ((d + e) % 2 != 0) continue;
        long m = (d + e) / 2, n = (e - d) / 2;
        if (n <= 0) continue;
        for (const auto& [cf, rf] : f.parts)
            for (const auto& [cg, rg] : g.parts) {
                int s = phi_sign(m, rf, twoM) * phi_sign(n, rg, twoM);
                if (s != 0) acc += cf * cg * Rational(s * (m - n));
            }
    }
    return acc;
}

} // namespace

QSeries mertens_D(const ThetaDecompSpec& f, const ThetaDecompSpec& g, const Rational& trunc) {
    if (f.M != g.M) throw std::domain_error("mertens_D: mismatched grading");
    QSeries out(4 * f.M, trunc);
    for (long N = 1; Rational(N, 4 * f.M) < trunc; ++N) {
        Rational c = correction_coeff(N, f, g) * Rational(2l);
        if (!c.is_zero()) out.set(Rational(N, 4 * f.M), Scalar(c));
    }
    return out;
}

QSeries umbral_D(const std::string& X, const std::string& cls, long r, const Rational& trunc) {
    ThetaDecompSpec spec = shadow_spec(X, cls, r);
    QSeries out(4 * spec.M, trunc);
    for (long N = 1; Rational(N, 4 * spec.M) < trunc; ++N) {
        Rational c = correction_coeff(N, spec, spec);
        if (!c.is_zero()) out.set(Rational(N, 4 * spec.M), Scalar(c));
    }
    return out;
}

QSeries holproj_F(const std::string& X, const std::string& cls, long r, const Rational& trunc) {
    const GroupTable& G = GroupTable::load(X);
    long m = G.root_system().coxeter;
    Rational ht = trunc + Rational(1l);
    QSeries H = mct(X, cls, ht).at(r);
    ThetaDecompSpec spec = shadow_spec(X, cls, r);
    QSeries F;
    if (spec.empty()) {
        QSeries Se = shadow_component(X, "1A", r, ht);
        F = (H * Se).truncated(trunc);
    } else {
        QSeries S = shadow_component(X, cls, r, ht);
        F = (H * S + umbral_D(X, cls, r, ht)).truncated(trunc);
    }
    auto v = F.valuation();
    if (v && v->sign() < 0)
        throw std::domain_error("PoleDetected: holproj_F has negative valuation " + v->str() +
                                " for " + X + " " + cls + " r=" + std::to_string(r));
    (void)m;
    return F;
}

Rational recursion_eval(const std::string& X, const std::string& cls, long r, long N) {
    const GroupTable& G = GroupTable::load(X);
    long m = G.root_system().coxeter;
    long fourM = 4 * m;
    long D = ((r * r) % fourM + fourM) % fourM;
    if (D == 0) D = fourM;
    Rational ht(N + 2);
    QSeries H = mct(X, cls, ht).at(r);
    auto A = [&](long n) {
        if (n < 0) return Rational();
        Rational e = Rational(n) - Rational(D, fourM);
        if (!(e < H.trunc())) throw std::domain_error("InsufficientTruncation");
        return H.coeff(e).rat();
    };
    ThetaDecompSpec spec = shadow_spec(X, cls, r);
    bool zero_shadow = spec.empty();
    ThetaDecompSpec sspec = zero_shadow ? shadow_spec(X, "1A", r) : spec;
    // sum over integers mm = rho mod 2M (all signs) of mm * A(N + (D - mm^2)/4M)
    Rational acc;
    long mmax = 1;
    while (mmax * mmax <= fourM * N + D) ++mmax;
    for (const auto& [c, rho] : sspec.parts) {
        for (long mm = -mmax; mm <= mmax; ++mm) {
            if (((mm - rho) % (2 * m) + 2 * m) % (2 * m) != 0) continue;
            long num = fourM * N + D - mm * mm;
            if (num < 0 || num % fourM != 0) continue;
            acc += c * Rational(mm) * A(num / fourM);
        }
    }
    if (!zero_shadow) acc += correction_coeff(fourM * N, spec, spec);
    return acc;
}

Report f_recurrence_check(long n_max) {
    Report rep;
    rep.X = "f(q)";
    rep.grade = "exact";
    rep.bound_used = Rational(n_max);
    QSeries f = mock_f(Rational(n_max + 2));
    auto cf = [&](const Rational& x) {
        if (!x.is_integer() || x.sign() < 0) return Rational();
        return f.coeff(x).rat();
    };
    for (long n = 1; n <= n_max; ++n) {
        Rational lhs;
        for (long mm = -n; mm <= n; ++mm) {
            if (3 * mm * mm + mm > 2 * n) continue;
            lhs += (Rational(mm) + Rational(1, 6)) *
                   cf(Rational(n) - Rational(3 * mm * mm + mm, 2));
        }
        Rational rhs = Rational(4, 3) * sigma1(Rational(n)) -
                       Rational(16, 3) * sigma1(Rational(n, 2));
        Rational dsum;
        for (long a = -2 * n; a <= 2 * n; ++a) {
            if (a == 0 || (2 * n) % a != 0) continue;
            long b = 2 * n / a;
            Rational Nv(-3 * a + b - 1, 6), Ntv(3 * a + b - 1, 6);
            if (!Nv.is_integer() || !Ntv.is_integer()) continue;
            dsum += d_weight(Nv, Ntv, Rational(1, 6), Rational(1, 6));
        }
        rhs -= Rational(2l) * dsum;
        bool ok = lhs == rhs;
        rep.add({"n=" + std::to_string(n), "f-recurrence", ok,
                 ok ? "" : lhs.str() + " != " + rhs.str()});
    }
    return rep;
}

std::string FitResult::json() const {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::object();
    for (const auto& [name, c] : coeffs) arr[name] = c.str();
    j["coefficients"] = arr;
    j["verified"] = verified;
    j["checked_to"] = checked_to;
    return j.dump();
}

FitResult quasimodular_fit(const QSeries& F,
                           const std::vector<std::pair<std::string, QSeries>>& basis, long n_fit,
                           long n_check) {
    size_t dim = basis.size();
    if (long(dim) > n_fit + 1) throw std::domain_error("quasimodular_fit: n_fit below dim");
    // Solve on coefficients 0..n_fit exactly.
    std::vector<std::vector<Rational>> Ab(size_t(n_fit + 1));
    for (long n = 0; n <= n_fit; ++n) {
        auto& row = Ab[n];
        row.resize(dim + 1);
        for (size_t i = 0; i < dim; ++i) row[i] = basis[i].second.coeff(Rational(n)).rat();
        row[dim] = F.coeff(Rational(n)).rat();
    }
    size_t rank = 0;
    std::vector<long> pivots;
    for (size_t col = 0; col < dim && rank < Ab.size(); ++col) {
        size_t sel = rank;
        while (sel < Ab.size() && Ab[sel][col].is_zero()) ++sel;
        if (sel == Ab.size()) throw std::domain_error("RankDeficientBasis");
        std::swap(Ab[rank], Ab[sel]);
        Rational pivot = Ab[rank][col];
        for (auto& v : Ab[rank]) v /= pivot;
        for (size_t i = 0; i < Ab.size(); ++i) {
            if (i == rank || Ab[i][col].is_zero()) continue;
            Rational f = Ab[i][col];
            for (size_t k = col; k <= dim; ++k) Ab[i][k] -= f * Ab[rank][k];
        }
        pivots.push_back(long(col));
        ++rank;
    }
    for (size_t i = rank; i < Ab.size(); ++i)
        if (!Ab[i][dim].is_zero())
            throw std::domain_error("quasimodular_fit: inconsistent system (not in span)");
    FitResult out;
    std::vector<Rational> x(dim);
    for (size_t i = 0; i < rank; ++i) x[pivots[i]] = Ab[i][dim];
    for (size_t i = 0; i < dim; ++i) out.coeffs.emplace_back(basis[i].first, x[i]);
    out.verified = true;
    for (long n = n_fit + 1; n <= n_check; ++n) {
        Rational pred;
        for (size_t i = 0; i < dim; ++i)
            pred += x[i] * basis[i].second.coeff(Rational(n)).rat();
        if (pred != F.coeff(Rational(n)).rat()) {
            out.verified = false;
            break;
        }
        out.checked_to = n;
    }
    return out;
}

} // namespace umbral
