#include "umbral/shadows.hpp"

#include <nlohmann/json.hpp>

namespace umbral {

QSeries VectorQSeries::at(long r) const {
    long m = two_m / 2;
    r %= two_m;
    if (r < 0) r += two_m;
    int sign = 1;
    if (r > m) {
        r = two_m - r;
        sign = -1;
    }
    if (r == 0) return QSeries::zero(trunc);
    auto al = alias.find(r);
    if (al != alias.end()) {
        sign *= al->second.second;
        r = al->second.first;
    }
    if (unspecified.count(r))
        throw std::domain_error("UnspecifiedComponent: r=" + std::to_string(r));
    auto it = comps.find(r);
    if (it == comps.end()) return QSeries::zero(trunc);
    return sign > 0 ? it->second : -it->second;
}

bool VectorQSeries::defined(long r) const {
    long m = two_m / 2;
    r %= two_m;
    if (r < 0) r += two_m;
    if (r > m) r = two_m - r;
    auto al = alias.find(r);
    if (al != alias.end()) r = al->second.first;
    return !unspecified.count(r);
}

void VectorQSeries::set(long r, QSeries s) { comps[r] = std::move(s); }

namespace {

QSeries S(long m, long r, const Rational& t) {
    return unary_theta(Rational(m), Rational(r), ThetaMode::S, t);
}

} // namespace

QSeries shadow_component(const std::string& X, const std::string& cls, long r,
                         const Rational& t) {
    const GroupTable& G = GroupTable::load(X);
    const TwistedEuler& te = G.twisted(cls);
    long m = G.root_system().coxeter;
    long rr = ((r % (2 * m)) + 2 * m) % (2 * m);
    if (rr > m) return -shadow_component(X, cls, 2 * m - rr, t);
    if (rr == 0 || rr == m) return QSeries::zero(t);
    r = rr;
    QSeries out = QSeries::zero(t);
    if (G.root_system().has_type('A')) {
        long c = r % 2 == 0 ? te.chiA.value() : te.chiA_bar.value();
        if (c != 0) out += S(m, r, t).scaled(Scalar(Rational(c)));
    }
    if (G.root_system().has_type('D')) {
        if (m == 6) {
            if (r % 2 == 1) {
                if (r % 6 == 3) {
                    out += S(6, r, t).scaled(Scalar(Rational(te.chiD_check.value())));
                } else {
                    out += S(6, r, t).scaled(Scalar(Rational(te.chiD_bar.value())));
                    out += S(6, 6 - r, t).scaled(Scalar(Rational(te.chiD.value())));
                }
            }
        } else if (m % 4 == 2) {
            if (r % 2 == 1) {
                out += S(m, r, t).scaled(Scalar(Rational(te.chiD_bar.value())));
                out += S(m, m - r, t).scaled(Scalar(Rational(te.chiD.value())));
            }
        } else {
            if (r % 2 == 0)
                out += S(m, m - r, t).scaled(Scalar(Rational(te.chiD.value())));
            else
                out += S(m, r, t).scaled(Scalar(Rational(te.chiD_bar.value())));
        }
    }
    if (G.root_system().has_type('E')) {
        long cb = te.chiE_bar.value();
        if (m == 12) {
            if (r == 1 || r == 7)
                out += (S(12, 1, t) + S(12, 7, t)).scaled(Scalar(Rational(cb)));
            else if (r == 5 || r == 11)
                out += (S(12, 5, t) + S(12, 11, t)).scaled(Scalar(Rational(cb)));
            else if (r == 4 || r == 8)
                out += (S(12, 4, t) + S(12, 8, t)).scaled(Scalar(Rational(te.chiE.value())));
        } else if (m == 18) {
            if (r == 1 || r == 5 || r == 7 || r == 11 || r == 13 || r == 17)
                out += (S(18, r, t) + S(18, 18 - r, t)).scaled(Scalar(Rational(cb)));
            else if (r == 3 || r == 15)
                out += S(18, 9, t).scaled(Scalar(Rational(cb)));
            else if (r == 9)
                out += (S(18, 3, t) + S(18, 9, t) + S(18, 15, t)).scaled(Scalar(Rational(cb)));
        } else if (m == 30) {
            if (r == 1 || r == 11 || r == 19 || r == 29)
                out += (S(30, 1, t) + S(30, 11, t) + S(30, 19, t) + S(30, 29, t))
                           .scaled(Scalar(Rational(cb)));
            else if (r == 7 || r == 13 || r == 17 || r == 23)
                out += (S(30, 7, t) + S(30, 13, t) + S(30, 17, t) + S(30, 23, t))
                           .scaled(Scalar(Rational(cb)));
        }
    }
    return out;
}

VectorQSeries shadow(const std::string& X, const std::string& cls, const Rational& t) {
    const GroupTable& G = GroupTable::load(X);
    long m = G.root_system().coxeter;
    VectorQSeries v;
    v.two_m = 2 * m;
    v.trunc = t;
    for (long r = 1; r < m; ++r) {
        QSeries s = shadow_component(X, cls, r, t);
        if (!s.is_zero()) v.set(r, std::move(s));
    }
    return v;
}

std::string vector_qseries_to_json(const VectorQSeries& v) {
    nlohmann::ordered_json j;
    j["m"] = v.two_m / 2;
    auto comps = nlohmann::ordered_json::object();
    for (const auto& [r, s] : v.comps)
        comps[std::to_string(r)] = nlohmann::ordered_json::parse(qseries_to_json(s));
    j["components"] = comps;
    auto flags = nlohmann::ordered_json::array();
    flags.push_back("odd");
    flags.push_back("period_2m");
    for (const auto& [r, a] : v.alias)
        flags.push_back("H_" + std::to_string(r) + "=" + (a.second < 0 ? "-" : "") + "H_" +
                        std::to_string(a.first));
    j["flags"] = flags;
    return j.dump();
}

} // namespace umbral
