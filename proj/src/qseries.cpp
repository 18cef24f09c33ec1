#include "umbral/qseries.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace umbral {

namespace {

long checked_long(const Int& v) {
    if (v > std::numeric_limits<long>::max() / 4 || v < std::numeric_limits<long>::min() / 4)
        throw std::overflow_error("QSeries: exponent key overflow");
    return v.convert_to<long>();
}

} // namespace

long QSeries::key_of(const Rational& e) const {
    Int num = e.num() * d_;
    if (num % e.den() != 0) throw std::domain_error("IncompatibleGrading: exponent off q^{1/D} grid");
    return checked_long(num / e.den());
}

QSeries QSeries::monomial(const Rational& exponent, Scalar c, Rational trunc) {
    long d = checked_long(exponent.den());
    QSeries s(d, std::move(trunc));
    if (exponent < s.trunc_ && !c.is_zero()) s.terms_[s.key_of(exponent)] = std::move(c);
    return s;
}

std::optional<Rational> QSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return Rational(Int(terms_.begin()->first), Int(d_));
}

Scalar QSeries::coeff(const Rational& e) const {
    if (!(e < trunc_)) throw std::domain_error("QSeries: coefficient beyond truncation");
    Int num = e.num() * d_;
    if (num % e.den() != 0) return Scalar(0);
    auto it = terms_.find(checked_long(num / e.den()));
    return it == terms_.end() ? Scalar(0) : it->second;
}

void QSeries::set(const Rational& e, Scalar c) {
    if (!(e < trunc_)) return;
    long k = key_of(e);
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = std::move(c);
}

void QSeries::add_to(const Rational& e, const Scalar& c) {
    if (!(e < trunc_) || c.is_zero()) return;
    long k = key_of(e);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void QSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || !(Rational(Int(it->first), Int(d_)) < trunc_))
            it = terms_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::with_den(long m) const {
    if (m == d_) return *this;
    if (m % d_ != 0) throw std::logic_error("with_den: not a multiple");
    long f = m / d_;
    QSeries out(m, trunc_);
    for (const auto& [k, c] : terms_) out.terms_[k * f] = c;
    return out;
}

QSeries QSeries::operator-() const {
    QSeries out(d_, trunc_);
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long m = lcm(Int(a.d_), Int(b.d_)).convert_to<long>();
    QSeries ea = a.with_den(m), eb = b.with_den(m);
    QSeries out(m, std::min(a.trunc_, b.trunc_));
    out.terms_ = std::move(ea.terms_);
    for (const auto& [k, c] : eb.terms_) {
        auto it = out.terms_.find(k);
        if (it == out.terms_.end())
            out.terms_[k] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    out.normalize();
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    long m = lcm(Int(a.d_), Int(b.d_)).convert_to<long>();
    QSeries ea = a.with_den(m), eb = b.with_den(m);
    // trunc = min over operands of (own trunc + other's valuation).
    Rational va = ea.terms_.empty() ? ea.trunc_ : Rational(Int(ea.terms_.begin()->first), Int(m));
    Rational vb = eb.terms_.empty() ? eb.trunc_ : Rational(Int(eb.terms_.begin()->first), Int(m));
    QSeries out(m, std::min(a.trunc_ + vb, b.trunc_ + va));
    if (ea.terms_.empty() || eb.terms_.empty()) return out;
    Rational tr = out.trunc_;
    std::vector<std::pair<long, const Scalar*>> av, bv;
    for (const auto& [k, c] : ea.terms_) av.emplace_back(k, &c);
    for (const auto& [k, c] : eb.terms_) bv.emplace_back(k, &c);
    std::map<long, Scalar>& t = out.terms_;
    for (const auto& [ka, ca] : av) {
        for (const auto& [kb, cb] : bv) {
            long k = ka + kb;
            if (!(Rational(Int(k), Int(m)) < tr)) break; // bv sorted ascending
            Scalar prod = *ca * *cb;
            if (prod.is_zero()) continue;
            auto it = t.find(k);
            if (it == t.end())
                t[k] = std::move(prod);
            else {
                it->second += prod;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return out;
}

QSeries QSeries::scaled(const Scalar& c) const {
    QSeries out(d_, trunc_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) {
        Scalar p = v * c;
        if (!p.is_zero()) out.terms_[k] = std::move(p);
    }
    return out;
}

QSeries QSeries::shifted(const Rational& e) const {
    long m = lcm(Int(d_), e.den()).convert_to<long>();
    QSeries ea = with_den(m);
    long off = checked_long(e.num() * (m / checked_long(e.den())));
    QSeries out(m, trunc_ + e);
    for (const auto& [k, c] : ea.terms_) out.terms_[k + off] = c;
    return out;
}

void QSeries::mul_binomial(const Rational& step, int sign) {
    long m = lcm(Int(d_), step.den()).convert_to<long>();
    *this = with_den(m);
    long s = checked_long(step.num() * (m / checked_long(step.den())));
    if (s <= 0) throw std::domain_error("mul_binomial: step must be positive");
    // (1 + sign q^s): process keys descending so each source is original.
    std::vector<std::pair<long, Scalar>> adds;
    for (const auto& [k, c] : terms_) {
        Rational e(Int(k + s), Int(m));
        if (e < trunc_) adds.emplace_back(k + s, sign > 0 ? c : -c);
    }
    for (auto& [k, c] : adds) {
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_[k] = std::move(c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
}

void QSeries::div_binomial(const Rational& step, int sign) {
    long m = lcm(Int(d_), step.den()).convert_to<long>();
    *this = with_den(m);
    long s = checked_long(step.num() * (m / checked_long(step.den())));
    if (s <= 0) throw std::domain_error("div_binomial: step must be positive");
    // out(k) = in(k) - sign * out(k-s), streamed in ascending key order.
    if (terms_.empty()) return;
    long lo = terms_.begin()->first;
    Int hi_num = trunc_.num() * m;
    long hi = checked_long(floor_div(hi_num, trunc_.den()));
    if (Rational(Int(hi), Int(m)) < trunc_) ++hi; // hi = first key at/above trunc
    for (long k = lo + s; k < hi; ++k) {
        auto src = terms_.find(k - s);
        if (src == terms_.end()) continue;
        Scalar delta = sign > 0 ? -src->second : src->second;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!delta.is_zero()) terms_[k] = std::move(delta);
        } else {
            it->second += delta;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
}

QSeries QSeries::truncated(const Rational& t) const {
    QSeries out(d_, std::min(t, trunc_));
    for (const auto& [k, c] : terms_)
        if (Rational(Int(k), Int(d_)) < out.trunc_) out.terms_[k] = c;
    return out;
}

QSeries qs_div(const QSeries& a, const QSeries& b) {
    auto vb = b.valuation();
    if (!vb) throw std::domain_error("ZeroDivisor: divisor vanishes up to truncation");
    Rational va = a.valuation().value_or(a.trunc());
    // Result known below min(trunc_a - vb, trunc_b + va - 2 vb).
    Rational tr = std::min(a.trunc() - *vb, b.trunc() + va - *vb - *vb);
    long m = lcm(Int(a.den()), Int(b.den())).convert_to<long>();
    QSeries num = a.with_den(m), den = b.with_den(m);
    Scalar lead = den.coeff(*vb);
    QSeries out(m, tr);
    // Solve q = num/den term by term: q(k) = (num(k+vbkey) - sum den(j) q(k-j+...)) / lead.
    long vbk = den.terms().begin()->first;
    std::map<long, Scalar> q;
    // Iterate target keys ascending from va - vb.
    long k0 = num.is_zero() ? 0 : num.terms().begin()->first - vbk;
    long kmax;
    {
        Int hi = tr.num() * m;
        kmax = floor_div(hi, tr.den()).convert_to<long>() + 1;
    }
    bool lead_rat = lead.is_rational();
    Rational lead_r = lead_rat ? lead.rat() : Rational(1l);
    for (long k = k0; k <= kmax; ++k) {
        if (!(Rational(Int(k), Int(m)) < tr)) break;
        Scalar acc = [&] {
            Rational e(Int(k + vbk), Int(m));
            if (!(e < a.trunc())) return Scalar(0);
            auto it = num.terms().find(k + vbk);
            return it == num.terms().end() ? Scalar(0) : it->second;
        }();
        for (const auto& [j, cj] : den.terms()) {
            if (j == vbk) continue;
            auto it = q.find(k - (j - vbk));
            if (it == q.end()) continue;
            acc -= cj * it->second;
        }
        if (acc.is_zero()) continue;
        if (lead_rat)
            q[k] = acc.is_rational() ? Scalar(acc.rat() / lead_r) : Scalar(acc.cyc() * (Rational(1l) / lead_r));
        else
            throw std::domain_error("qs_div: cyclotomic leading divisor unsupported");
    }
    for (auto& [k, c] : q) out.set(Rational(Int(k), Int(m)), std::move(c));
    return out;
}

QSeries qs_rescale(const QSeries& a, const Rational& c) {
    if (!(Rational(0l) < c)) throw std::domain_error("qs_rescale: scale must be positive");
    Rational step = c / Rational(Int(a.den()));
    QSeries tmp(step.den().convert_to<long>(), a.trunc() * c);
    for (const auto& [k, v] : a.terms()) tmp.set(Rational(Int(k), Int(a.den())) * c, v);
    return tmp;
}

QSeries qs_project(const QSeries& a, const Rational& alpha) {
    // alpha must be representable on the q^{1/D} grid (vacuous for a zero series).
    Int num = alpha.num() * a.den();
    if (num % alpha.den() != 0) {
        if (a.is_zero())
            return QSeries(lcm(Int(a.den()), alpha.den()).convert_to<long>(), a.trunc());
        throw std::domain_error("IncompatibleGrading: projector class off the exponent grid");
    }
    QSeries out(a.den(), a.trunc());
    for (const auto& [k, v] : a.terms()) {
        Rational diff = Rational(Int(k), Int(a.den())) - alpha;
        if (diff.is_integer()) out.set(Rational(Int(k), Int(a.den())), v);
    }
    return out;
}

QSeries qs_pow(const QSeries& a, long e) {
    if (e < 0) return qs_div(QSeries::one(a.trunc()), qs_pow(a, -e));
    QSeries r = QSeries::one(a.trunc());
    for (long i = 0; i < e; ++i) r *= a;
    return r;
}

std::string QSeries::str(size_t max_terms) const {
    std::ostringstream os;
    size_t n = 0;
    for (const auto& [k, c] : terms_) {
        if (n++ >= max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << (c.is_rational() ? c.rat().str() : std::string("(cyc)")) << "*q^(" << k << "/" << d_
           << ")";
    }
    if (terms_.empty()) os << "0";
    os << "  [O(q^" << trunc_.str() << ")]";
    return os.str();
}

// ---- JSON ----------------------------------------------------------------

std::string qseries_to_json(const QSeries& s) {
    nlohmann::ordered_json j;
    j["den"] = s.den();
    j["trunc"] = s.trunc().str();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : s.terms()) {
        nlohmann::ordered_json t = nlohmann::ordered_json::array();
        t.push_back(k);
        if (c.is_rational()) {
            t.push_back(c.rat().str());
        } else {
            Cyclotomic cy = c.cyc();
            nlohmann::ordered_json v;
            v["conductor"] = cy.conductor();
            auto arr = nlohmann::ordered_json::array();
            for (const auto& x : cy.coords()) arr.push_back(x.str());
            v["coords"] = arr;
            t.push_back(v);
        }
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump();
}

QSeries qseries_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    QSeries s(j.at("den").get<long>(), Rational::parse(j.at("trunc").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        long k = t.at(0).get<long>();
        Scalar c;
        if (t.at(1).is_string()) {
            c = Scalar(Rational::parse(t.at(1).get<std::string>()));
        } else {
            long n = t.at(1).at("conductor").get<long>();
            std::vector<Rational> coords;
            for (const auto& x : t.at(1).at("coords")) coords.push_back(Rational::parse(x.get<std::string>()));
            c = Scalar(Cyclotomic(n, std::move(coords)));
        }
        s.set(Rational(Int(k), Int(s.den())), std::move(c));
    }
    return s;
}

} // namespace umbral
