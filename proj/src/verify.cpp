#include "umbral/verify.hpp"

#include "umbral/mocktheta.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace umbral {

MultiplicitySeries multiplicity_series(const std::string& X, size_t chi_index, long r,
                                       const Rational& trunc) {
    const GroupTable& G = GroupTable::load(X);
    MultiplicitySeries out;
    out.X = X;
    out.chi_index = chi_index;
    out.r = r;
    // (1/|G|) sum over classes of |class| conj(chi(g)) H_{g,r}; the class sum
    // stays rational because fused classes share H and conjugate characters
    // pair up. Collect the cyclotomic weights per fused label first.
    std::map<std::string, Cyclotomic> weights;
    for (const auto& cls : G.classes()) {
        Cyclotomic w = G.chi(chi_index, G.class_index(cls)).conj() *
                       Rational(G.class_size(cls));
        const std::string& f = G.fused_label(cls);
        auto it = weights.find(f);
        if (it == weights.end())
            weights[f] = w;
        else
            it->second += w;
    }
    QSeries acc(1, trunc);
    for (const auto& [fused, w] : weights) {
        if (w.is_zero()) continue;
        if (!w.is_rational())
            throw std::logic_error("multiplicity_series: irrational class weight survived");
        QSeries h = mct(X, G.fused_members(fused).front(), trunc).at(r);
        acc += h.scaled(Scalar(w.rational_part()));
    }
    Rational inv_order(Int(1), G.group_order());
    out.series = acc.scaled(Scalar(inv_order));
    return out;
}

void Report::add(ReportEntry e) {
    if (!e.pass) ++findings;
    entries.push_back(std::move(e));
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["X"] = X;
    j["grade"] = grade;
    j["bound"] = bound_used.str();
    j["findings"] = findings;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["subject"] = e.subject;
        je["check"] = e.check;
        je["pass"] = e.pass;
        if (!e.detail.empty()) je["detail"] = e.detail;
        arr.push_back(je);
    }
    j["entries"] = arr;
    return j.dump();
}

Int n_chi(const std::string& X, size_t chi_index) {
    const GroupTable& G = GroupTable::load(X);
    Int acc = 1;
    for (const auto& cls : G.classes()) {
        if (G.chi(chi_index, G.class_index(cls)).is_zero()) continue;
        const TwistedEuler& te = G.twisted(cls);
        acc = lcm(acc, Int(te.ng) * te.hg);
    }
    return acc;
}

Int sturm_bound(long weight, const Int& level) {
    if (level <= 0) throw std::domain_error("sturm_bound: level must be positive");
    // [SL2(Z) : Gamma(L)] = L^3 prod (1 - p^-2) for L > 2; 6 for L = 2; 1 for L = 1.
    Int index;
    if (level == 1)
        index = 1;
    else if (level == 2)
        index = 6;
    else {
        index = level * level * level;
        Int L = level;
        for (Int p = 2; p * p <= L; ++p) {
            if (L % p != 0) continue;
            index = index / (p * p) * (p * p - 1);
            while (L % p == 0) L /= p;
        }
        if (L > 1) index = index / (L * L) * (L * L - 1);
    }
    Int num = Int(weight) * index;
    return (num + 11) / 12; // ceil(weight * index / 12)
}

Report reconstruct_check(const std::string& X, const Rational& trunc) {
    const GroupTable& G = GroupTable::load(X);
    Report rep;
    rep.X = X;
    rep.grade = "evidence";
    rep.bound_used = trunc;
    std::vector<long> iset = G.root_system().iset();
    for (long r : iset) {
        if (!mct(X, "1A", trunc).defined(r)) continue; // open component (D16E8, r=9)
        // Precompute multiplicity series once per (chi, r).
        std::vector<QSeries> mser;
        for (size_t c = 0; c < G.num_chars(); ++c)
            mser.push_back(multiplicity_series(X, c, r, trunc).series);
        for (const auto& cls : G.classes()) {
            // sum_chi chi(g) H_{chi,r}: cyclotomic scalars combine to rational.
            QSeries lhsq(1, trunc);
            Cyclotomic residual{Rational(0l)};
            std::map<long, Cyclotomic> acc_terms;
            bool rational_only = true;
            for (size_t c = 0; c < G.num_chars(); ++c) {
                const Cyclotomic& chi = G.chi(c, G.class_index(cls));
                if (chi.is_zero() || mser[c].is_zero()) continue;
                if (chi.is_rational()) {
                    lhsq += mser[c].scaled(Scalar(chi.rational_part()));
                } else {
                    rational_only = false;
                    long m = lcm(Int(lhsq.den()), Int(mser[c].den())).convert_to<long>();
                    QSeries ser = mser[c].with_den(m);
                    for (const auto& [k, v] : ser.terms()) {
                        Cyclotomic add = chi * v.rat();
                        auto it = acc_terms.find(k);
                        if (it == acc_terms.end())
                            acc_terms[k] = add;
                        else
                            it->second += add;
                    }
                }
            }
            (void)residual;
            QSeries rhs = mct(X, cls, trunc).at(r);
            QSeries diff = rhs - lhsq;
            bool ok = true;
            std::string detail;
            if (rational_only) {
                ok = diff.is_zero();
                if (!ok) detail = "first mismatch at " + diff.valuation()->str();
            } else {
                // merge cyclotomic accumulation into the comparison
                long m = lcm(Int(diff.den()), Int(1)).convert_to<long>();
                QSeries dd = diff.with_den(m);
                std::map<long, Cyclotomic> total;
                for (const auto& [k, v] : dd.terms()) total[k] = v.cyc();
                for (const auto& [k, v] : acc_terms) {
                    auto it = total.find(k);
                    if (it == total.end())
                        total[k] = -v;
                    else
                        it->second -= v;
                }
                for (const auto& [k, v] : total)
                    if (!v.is_zero()) {
                        ok = false;
                        detail = "first mismatch at key " + std::to_string(k);
                        break;
                    }
            }
            rep.add({cls + ",r=" + std::to_string(r), "reconstruction", ok, detail});
        }
    }
    return rep;
}

Report check_nonneg_integral(const std::string& X, long n_bound) {
    const GroupTable& G = GroupTable::load(X);
    long m = G.root_system().coxeter;
    Report rep;
    rep.X = X;
    rep.bound_used = Rational(n_bound);
    Rational trunc(n_bound + 1);
    std::vector<long> iset = G.root_system().iset();
    // Sturm comparison: weight 2 on Gamma(4m) cap Gamma_0(N_chi).
    Int worst_sturm = 0;
    for (size_t c = 0; c < G.num_chars(); ++c) {
        Int L = lcm(Int(4 * m), n_chi(X, c));
        Int b = sturm_bound(2, L);
        if (b > worst_sturm) worst_sturm = b;
    }
    rep.grade = Int(n_bound) >= worst_sturm ? "proof" : "evidence";
    for (long r : iset) {
        if (!mct(X, "1A", trunc).defined(r)) {
            rep.add({"r=" + std::to_string(r), "skipped-unspecified", true,
                     "component not prescribed"});
            continue;
        }
        for (size_t c = 0; c < G.num_chars(); ++c) {
            MultiplicitySeries ms = multiplicity_series(X, c, r, trunc);
            bool ok_int = true, ok_sign = true;
            std::string detail;
            Rational min_coeff;
            bool have_min = false;
            for (long n = 0; n <= n_bound; ++n) {
                Rational e = Rational(n) - Rational(r * r, 4 * m);
                Rational v = ms.series.coeff(e).rat();
                if (!have_min || v < min_coeff) {
                    min_coeff = v;
                    have_min = true;
                }
                if (!v.is_integer()) {
                    ok_int = false;
                    detail = "non-integral m(" + std::to_string(n) + ") = " + v.str();
                    break;
                }
                if (n == 0) {
                    // the polar entry: -2 allowed exactly at the trivial
                    // character when r^2 = 1 mod 4m, zero otherwise
                    bool trivial = true;
                    for (size_t g = 0; g < G.num_classes(); ++g)
                        if (G.chi(c, g) != Cyclotomic(Rational(1l))) trivial = false;
                    Rational expect =
                        (trivial && (r * r) % (4 * m) == 1) ? Rational(-2l) : Rational(0l);
                    if (v != expect && v.sign() < 0) {
                        ok_sign = false;
                        detail = "polar coefficient " + v.str();
                        break;
                    }
                } else if (v.sign() < 0) {
                    ok_sign = false;
                    detail = "negative m(" + std::to_string(n) + ") = " + v.str();
                    break;
                }
            }
            rep.add({"chi=" + std::to_string(c + 1) + ",r=" + std::to_string(r),
                     "nonneg-integral", ok_int && ok_sign,
                     detail.empty() ? "min=" + min_coeff.str() : detail});
        }
    }
    return rep;
}

Report identity_suite(const std::string& name) {
    Report rep;
    rep.X = "A2^12";
    rep.grade = "exact";
    rep.bound_used = Rational(60l);
    if (name != "mock-theta-A2^12")
        throw std::domain_error("identity_suite: unknown suite " + name);
    Rational t(62l);
    Rational t2(124l);
    auto check = [&](const std::string& label, const QSeries& lhs, const QSeries& rhs) {
        QSeries d = lhs.truncated(std::min(lhs.trunc(), rhs.trunc())) -
                    rhs.truncated(std::min(lhs.trunc(), rhs.trunc()));
        rep.add({label, "identity", d.is_zero(),
                 d.is_zero() ? "" : "first mismatch at " + d.valuation()->str()});
    };
    QSeries f2 = qs_rescale(mock_f(t2), Rational(2l)).scaled(Scalar(Rational(-2l)))
                     .shifted(Rational(-1, 12));
    check("2B,1=f", mct_component("A2^12", "2B", 1, t), f2.truncated(t));
    check("2C,1=f", mct_component("A2^12", "2C", 1, t), f2.truncated(t));
    check("4C,1=f", mct_component("A2^12", "4C", 1, t), f2.truncated(t));
    QSeries chi2 = qs_rescale(mock_chi(t2), Rational(2l)).scaled(Scalar(Rational(-2l)))
                       .shifted(Rational(-1, 12));
    check("6C,1=chi", mct_component("A2^12", "6C", 1, t), chi2.truncated(t));
    check("6D,1=chi", mct_component("A2^12", "6D", 1, t), chi2.truncated(t));
    QSeries phin = qs_rescale(substitute_neg_q(mock_phi(t2)), Rational(2l))
                       .scaled(Scalar(Rational(-2l)))
                       .shifted(Rational(-1, 12));
    check("8C,1=phi", mct_component("A2^12", "8C", 1, t), phin.truncated(t));
    check("8D,1=phi", mct_component("A2^12", "8D", 1, t), phin.truncated(t));
    QSeries om = substitute_neg_q(mock_omega(t)).scaled(Scalar(Rational(-4l)))
                     .shifted(Rational(2, 3));
    check("2B,2=omega", mct_component("A2^12", "2B", 2, t), om.truncated(t));
    check("2C,2=-omega", -mct_component("A2^12", "2C", 2, t), om.truncated(t));
    QSeries rh = substitute_neg_q(mock_rho(t)).scaled(Scalar(Rational(2l)))
                     .shifted(Rational(2, 3));
    check("6C,2=rho", mct_component("A2^12", "6C", 2, t), rh.truncated(t));
    check("6D,2=-rho", -mct_component("A2^12", "6D", 2, t), rh.truncated(t));
    return rep;
}

std::string multiplicity_csv(const std::string& X, long r, long n_bound) {
    const GroupTable& G = GroupTable::load(X);
    long m = G.root_system().coxeter;
    std::ostringstream os;
    os << "n";
    for (size_t c = 0; c < G.num_chars(); ++c) os << ",chi_" << c + 1;
    os << "\n";
    std::vector<QSeries> mser;
    Rational trunc(n_bound + 1);
    for (size_t c = 0; c < G.num_chars(); ++c)
        mser.push_back(multiplicity_series(X, c, r, trunc).series);
    for (long n = 0; n <= n_bound; ++n) {
        os << n;
        Rational e = Rational(n) - Rational(r * r, 4 * m);
        for (const auto& s : mser) os << "," << s.coeff(e).rat().str();
        os << "\n";
    }
    return os.str();
}

} // namespace umbral
