#include "umbral/jseries.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace umbral {

namespace {
int g_threads = 2;
}

void set_jseries_threads(int n) { g_threads = std::max(1, n); }
int jseries_threads() { return g_threads; }

void URow::trim() {
    size_t a = 0, b = c.size();
    while (a < b && c[a].is_zero()) ++a;
    while (b > a && c[b - 1].is_zero()) --b;
    if (a == b) {
        c.clear();
        lo = 0;
        return;
    }
    if (a > 0 || b < c.size()) {
        std::vector<Rational> nc(c.begin() + a, c.begin() + b);
        c = std::move(nc);
        lo += long(a);
    }
}

long JSeries::key_of(const Rational& e) const {
    Int num = e.num() * qden_;
    if (num % e.den() != 0) throw std::domain_error("JSeries: exponent off grid");
    return num.convert_to<long>() / e.den().convert_to<long>();
}

JSeries JSeries::j_monomial(const Rational& qexp, long wpow, const Rational& coeff,
                            const Rational& qtrunc) {
    JSeries s(qexp.den().convert_to<long>(), qtrunc);
    if (qexp < qtrunc && !coeff.is_zero()) {
        URow r;
        r.lo = wpow;
        r.c = {coeff};
        s.rows_[s.key_of(qexp)] = std::move(r);
    }
    return s;
}

Rational JSeries::qval() const {
    if (rows_.empty()) return qtrunc_;
    return Rational(Int(rows_.begin()->first), Int(qden_));
}

JSeries JSeries::with_qden(long m) const {
    if (m == qden_) return *this;
    if (m % qden_ != 0) throw std::logic_error("JSeries::with_qden: not a multiple");
    long f = m / qden_;
    JSeries out(m, qtrunc_);
    for (const auto& [k, r] : rows_) out.rows_[k * f] = r;
    return out;
}

JSeries JSeries::operator-() const {
    JSeries out(qden_, qtrunc_);
    for (const auto& [k, r] : rows_) {
        URow nr = r;
        for (auto& x : nr.c) x = -x;
        out.rows_[k] = std::move(nr);
    }
    return out;
}

JSeries JSeries::scaled(const Rational& v) const {
    if (v.is_zero()) return JSeries(qden_, qtrunc_);
    JSeries out(qden_, qtrunc_);
    for (const auto& [k, r] : rows_) {
        URow nr = r;
        for (auto& x : nr.c) x *= v;
        out.rows_[k] = std::move(nr);
    }
    return out;
}

JSeries JSeries::shifted(const Rational& qexp, long wpow, const Rational& coeff) const {
    long m = lcm(Int(qden_), qexp.den()).convert_to<long>();
    JSeries base = with_qden(m);
    long off = (qexp.num() * (m / qexp.den().convert_to<long>())).convert_to<long>();
    JSeries out(m, qtrunc_ + qexp);
    for (auto& [k, r] : base.rows_) {
        URow nr = std::move(r);
        nr.lo += wpow;
        if (nr.cap < CAP_INF) nr.cap += wpow;
        for (auto& x : nr.c) x *= coeff;
        out.rows_[k + off] = std::move(nr);
    }
    return out;
}

namespace {

URow add_rows(const URow& a, const URow& b) {
    URow out;
    out.cap = std::min(a.cap, b.cap);
    if (a.empty() && b.empty()) return out;
    long lo = a.empty() ? b.lo : (b.empty() ? a.lo : std::min(a.lo, b.lo));
    long hi = a.empty() ? b.hi() : (b.empty() ? a.hi() : std::max(a.hi(), b.hi()));
    hi = std::min(hi, out.cap);
    if (hi < lo) return out;
    out.lo = lo;
    out.c.assign(size_t(hi - lo + 1), Rational());
    for (long p = lo; p <= hi; ++p) {
        const Rational* pa = a.at(p);
        const Rational* pb = b.at(p);
        if (pa && pb)
            out.c[p - lo] = *pa + *pb;
        else if (pa)
            out.c[p - lo] = *pa;
        else if (pb)
            out.c[p - lo] = *pb;
    }
    out.trim();
    return out;
}

} // namespace

JSeries operator+(const JSeries& a, const JSeries& b) {
    long m = lcm(Int(a.qden_), Int(b.qden_)).convert_to<long>();
    JSeries ea = a.with_qden(m), eb = b.with_qden(m);
    JSeries out(m, std::min(a.qtrunc_, b.qtrunc_));
    for (auto& [k, r] : ea.rows_) {
        if (!(Rational(Int(k), Int(m)) < out.qtrunc_)) continue;
        auto it = eb.rows_.find(k);
        out.rows_[k] = it == eb.rows_.end() ? std::move(r) : add_rows(r, it->second);
    }
    for (auto& [k, r] : eb.rows_) {
        if (!(Rational(Int(k), Int(m)) < out.qtrunc_)) continue;
        if (!ea.rows_.count(k)) out.rows_[k] = std::move(r);
    }
    for (auto it = out.rows_.begin(); it != out.rows_.end();)
        it = (it->second.empty() && it->second.cap == CAP_INF) ? out.rows_.erase(it) : ++it;
    return out;
}

JSeries operator-(const JSeries& a, const JSeries& b) { return a + (-b); }

namespace {

// Common-denominator integer view of a row for the convolution kernel.
struct IntRow {
    long lo = 0;
    long cap = CAP_INF;
    Int den = 1;
    std::vector<Int> c;
};

IntRow int_view(const URow& r) {
    IntRow v;
    v.lo = r.lo;
    v.cap = r.cap;
    for (const auto& x : r.c) v.den = lcm(v.den, x.den());
    v.c.reserve(r.c.size());
    for (const auto& x : r.c) v.c.push_back(x.num() * (v.den / x.den()));
    return v;
}

} // namespace

JSeries operator*(const JSeries& a, const JSeries& b) {
    long m = lcm(Int(a.qden_), Int(b.qden_)).convert_to<long>();
    JSeries ea = a.with_qden(m), eb = b.with_qden(m);
    Rational va = ea.qval(), vb = eb.qval();
    JSeries out(m, std::min(a.qtrunc_ + vb, b.qtrunc_ + va));
    if (ea.rows_.empty() || eb.rows_.empty()) return out;

    std::vector<std::pair<long, IntRow>> ra, rb;
    for (const auto& [k, r] : ea.rows_) ra.emplace_back(k, int_view(r));
    for (const auto& [k, r] : eb.rows_) rb.emplace_back(k, int_view(r));

    std::vector<long> keys;
    {
        std::map<long, bool> seen;
        for (const auto& [k1, r1] : ra)
            for (const auto& [k2, r2] : rb) {
                long k = k1 + k2;
                if (Rational(Int(k), Int(m)) < out.qtrunc_) seen[k] = true;
            }
        for (auto& [k, _] : seen) keys.push_back(k);
    }

    std::map<long, URow> result;
    for (long k : keys) result[k] = URow{};
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= keys.size()) break;
            long k = keys[i];
            // Gather contributing pairs.
            long cap = CAP_INF, lo = CAP_INF, hi = -CAP_INF;
            std::vector<std::pair<const IntRow*, const IntRow*>> pairs;
            // Lowest power at which a row could be nonzero (unknown region counts).
            auto possible_lo = [](const IntRow& r) {
                long v = CAP_INF;
                if (!r.c.empty()) v = r.lo;
                if (r.cap < CAP_INF) v = std::min(v, r.cap + 1);
                return v;
            };
            for (const auto& [k1, r1] : ra) {
                for (const auto& [k2, r2] : rb) {
                    if (k1 + k2 != k) continue;
                    long c1 = r1.cap < CAP_INF && possible_lo(r2) < CAP_INF
                                  ? r1.cap + possible_lo(r2)
                                  : CAP_INF;
                    long c2 = r2.cap < CAP_INF && possible_lo(r1) < CAP_INF
                                  ? r2.cap + possible_lo(r1)
                                  : CAP_INF;
                    cap = std::min(cap, std::min(c1, c2));
                    if (!r1.c.empty() && !r2.c.empty()) {
                        pairs.emplace_back(&r1, &r2);
                        lo = std::min(lo, r1.lo + r2.lo);
                        hi = std::max(hi, r1.lo + long(r1.c.size()) - 1 + r2.lo +
                                              long(r2.c.size()) - 1);
                    }
                }
            }
            URow& outr = result[k];
            outr.cap = cap;
            if (pairs.empty() || lo > hi) {
                outr.trim();
                continue;
            }
            hi = std::min(hi, cap);
            if (hi < lo) continue;
            Int den = 1;
            for (auto& [r1, r2] : pairs) den = lcm(den, r1->den * r2->den);
            std::vector<Int> acc(size_t(hi - lo + 1), Int(0));
            for (auto& [r1, r2] : pairs) {
                Int scale = den / (r1->den * r2->den);
                for (size_t i1 = 0; i1 < r1->c.size(); ++i1) {
                    if (r1->c[i1] == 0) continue;
                    Int v = scale == 1 ? r1->c[i1] : Int(r1->c[i1] * scale);
                    long base = r1->lo + long(i1) + r2->lo - lo;
                    long room = hi - lo - base;
                    if (room < 0) continue;
                    size_t jmax = std::min(r2->c.size(), size_t(room + 1));
                    for (size_t i2 = 0; i2 < jmax; ++i2) {
                        if (r2->c[i2] == 0) continue;
                        acc[base + i2] += v * r2->c[i2];
                    }
                }
            }
            outr.lo = lo;
            outr.c.reserve(acc.size());
            for (auto& x : acc) outr.c.emplace_back(std::move(x), den);
            outr.trim();
        }
    };
    int nt = std::min<int>(g_threads, int(keys.size()));
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int i = 0; i < nt; ++i) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }
    for (auto& [k, r] : result)
        if (!r.empty() || r.cap < CAP_INF) out.rows_[k] = std::move(r);
    return out;
}

JSeries mul_columns(const JSeries& a, const JSeries& b, const std::vector<long>& cols) {
    long m = lcm(Int(a.qden_), Int(b.qden_)).convert_to<long>();
    JSeries ea = a.with_qden(m), eb = b.with_qden(m);
    Rational va = ea.qval(), vb = eb.qval();
    JSeries out(m, std::min(a.qtrunc_ + vb, b.qtrunc_ + va));
    if (ea.rows_.empty() || eb.rows_.empty() || cols.empty()) return out;
    long cmax = *std::max_element(cols.begin(), cols.end());
    auto possible_lo = [](const URow& r) {
        long v = CAP_INF;
        if (!r.c.empty()) v = r.lo;
        if (r.cap < CAP_INF) v = std::min(v, r.cap + 1);
        return v;
    };
    std::vector<std::pair<long, const URow*>> ra, rb;
    for (const auto& [k, r] : ea.rows_) ra.emplace_back(k, &r);
    for (const auto& [k, r] : eb.rows_) rb.emplace_back(k, &r);
    std::map<long, URow> result;
    for (const auto& [k1, r1] : ra) {
        for (const auto& [k2, r2] : rb) {
            long k = k1 + k2;
            if (!(Rational(Int(k), Int(m)) < out.qtrunc_)) continue;
            URow& acc = result[k];
            if (acc.c.empty() && acc.lo == 0 && acc.cap == CAP_INF) {
                acc.lo = *std::min_element(cols.begin(), cols.end());
                acc.c.assign(size_t(cmax - acc.lo + 1), Rational());
            }
            long c1 = r1->cap < CAP_INF && possible_lo(*r2) < CAP_INF ? r1->cap + possible_lo(*r2)
                                                                      : CAP_INF;
            long c2 = r2->cap < CAP_INF && possible_lo(*r1) < CAP_INF ? r2->cap + possible_lo(*r1)
                                                                      : CAP_INF;
            long cap = std::min(c1, c2);
            if (cap < cmax)
                throw std::domain_error("WindowTooNarrow: column product cap " +
                                        std::to_string(cap) + " below requested column " +
                                        std::to_string(cmax));
            if (r1->c.empty() || r2->c.empty()) continue;
            for (long p : cols) {
                Rational s;
                long p1lo = std::max(r1->lo, p - r2->hi());
                long p1hi = std::min(r1->hi(), p - r2->lo);
                for (long p1 = p1lo; p1 <= p1hi; ++p1) {
                    const Rational& x = r1->c[p1 - r1->lo];
                    if (x.is_zero()) continue;
                    s += x * r2->c[p - p1 - r2->lo];
                }
                if (!s.is_zero()) acc.c[p - acc.lo] += s;
            }
        }
    }
    for (auto& [k, r] : result) {
        r.cap = cmax; // columns beyond cmax were not computed
        r.trim();
        if (!r.empty() || r.cap < CAP_INF) out.rows_[k] = std::move(r);
    }
    return out;
}

void JSeries::mul_binom(const Rational& qstep, long wstep, int sign) {
    long m = lcm(Int(qden_), qstep.den()).convert_to<long>();
    if (m != qden_) *this = with_qden(m);
    long b = (qstep.num() * (m / qstep.den().convert_to<long>())).convert_to<long>();
    if (b < 0) throw std::domain_error("mul_binom: negative q-step");
    if (b == 0) {
        // (1 + sign*w^{wstep}) as a one-row series product.
        JSeries f(qden_, qtrunc_);
        URow r;
        r.lo = std::min(0L, wstep);
        r.c.assign(size_t(std::abs(wstep) + 1), Rational());
        r.c[0 - r.lo] = Rational(1l);
        r.c[wstep - r.lo] += Rational(sign);
        f.rows_[0] = std::move(r);
        *this = *this * f;
        return;
    }
    std::map<long, URow> add;
    for (const auto& [k, r] : rows_) {
        if (!(Rational(Int(k + b), Int(m)) < qtrunc_)) continue;
        URow nr = r;
        nr.lo += wstep;
        if (nr.cap < CAP_INF) nr.cap += wstep;
        if (sign < 0)
            for (auto& x : nr.c) x = -x;
        add[k + b] = std::move(nr);
    }
    for (auto& [k, r] : add) {
        auto it = rows_.find(k);
        if (it == rows_.end())
            rows_[k] = std::move(r);
        else
            it->second = add_rows(it->second, r);
    }
}

void JSeries::div_binom(const Rational& qstep, long wstep, int sign, long window) {
    long m = lcm(Int(qden_), qstep.den()).convert_to<long>();
    if (m != qden_) *this = with_qden(m);
    long b = (qstep.num() * (m / qstep.den().convert_to<long>())).convert_to<long>();
    if (b < 0) throw std::domain_error("div_binom: negative q-step");
    if (b == 0) {
        // Divide each row by (1 + sign*w^{a}), a > 0: streaming cumsum upward,
        // valid in the annulus; results window-capped.
        if (wstep <= 0) throw std::domain_error("div_binom: annulus unit needs wstep > 0");
        for (auto& [k, r] : rows_) {
            if (r.empty()) continue;
            long top = std::min(window, r.cap);
            if (top < r.lo) {
                r.c.clear();
                r.cap = top;
                continue;
            }
            std::vector<Rational> out(size_t(top - r.lo + 1), Rational());
            for (long p = r.lo; p <= top; ++p) {
                Rational v = p <= r.hi() ? r.c[p - r.lo] : Rational();
                if (p - wstep >= r.lo) {
                    const Rational& prev = out[p - wstep - r.lo];
                    v -= prev * Rational(sign);
                }
                out[p - r.lo] = std::move(v);
            }
            r.c = std::move(out);
            r.cap = top;
            r.trim();
            if (r.empty()) r.lo = 0;
        }
        return;
    }
    // out(n) = in(n) - sign * shift(out(n-b)); ascending in q.
    long kmax;
    {
        Rational t = qtrunc_;
        kmax = floor_div(t.num() * m, t.den()).convert_to<long>() + 1;
    }
    if (rows_.empty()) return;
    long kmin = rows_.begin()->first;
    for (long k = kmin + b; k < kmax; ++k) {
        if (!(Rational(Int(k), Int(m)) < qtrunc_)) break;
        auto prev = rows_.find(k - b);
        if (prev == rows_.end()) continue;
        URow shifted = prev->second;
        shifted.lo += wstep;
        if (shifted.cap < CAP_INF) shifted.cap += wstep;
        if (sign > 0)
            for (auto& x : shifted.c) x = -x;
        auto it = rows_.find(k);
        if (it == rows_.end()) {
            if (!shifted.empty() || shifted.cap < CAP_INF) rows_[k] = std::move(shifted);
        } else {
            it->second = add_rows(it->second, shifted);
        }
    }
}

JSeries JSeries::times_qseries(const QSeries& s) const {
    QSeries sr = s;
    long m = lcm(Int(qden_), Int(s.den())).convert_to<long>();
    JSeries base = with_qden(m);
    sr = sr.with_den(m);
    Rational vj = qval();
    Rational vs = sr.valuation().value_or(sr.trunc());
    JSeries out(m, std::min(qtrunc_ + vs, sr.trunc() + vj));
    for (const auto& [ks, cs] : sr.terms()) {
        Rational c = cs.rat();
        for (const auto& [kj, r] : base.rows_) {
            long k = kj + ks;
            if (!(Rational(Int(k), Int(m)) < out.qtrunc_)) continue;
            URow nr = r;
            for (auto& x : nr.c) x *= c;
            auto it = out.rows_.find(k);
            if (it == out.rows_.end())
                out.rows_[k] = std::move(nr);
            else
                it->second = add_rows(it->second, nr);
        }
    }
    return out;
}

QSeries JSeries::column(long wpow) const {
    QSeries out(qden_, qtrunc_);
    for (const auto& [k, r] : rows_) {
        if (r.cap < wpow)
            throw std::domain_error("WindowTooNarrow: column " + std::to_string(wpow) +
                                    " beyond cap at q-key " + std::to_string(k));
        const Rational* p = r.at(wpow);
        if (p && !p->is_zero()) out.set(Rational(Int(k), Int(qden_)), Scalar(*p));
    }
    return out;
}

void JSeries::trim_certify(const std::function<long(const Rational&)>& bound, long guard) {
    for (auto& [k, r] : rows_) {
        Rational qe{Int(k), Int(qden_)};
        long b = bound(qe);
        if (r.cap < b + guard)
            throw std::domain_error("WindowTooNarrow: cap " + std::to_string(r.cap) +
                                    " below support bound " + std::to_string(b) + "+" +
                                    std::to_string(guard) + " at q-key " + std::to_string(k));
        for (long p = std::max(r.lo, b + 1); p <= r.hi(); ++p)
            if (!r.c[p - r.lo].is_zero())
                throw std::domain_error(
                    "ResidualPolarPart: nonzero coefficient outside support bound at w^" +
                    std::to_string(p) + ", q-key " + std::to_string(k));
        if (r.lo < -b) {
            for (long p = r.lo; p < -b; ++p)
                if (!r.c[p - r.lo].is_zero())
                    throw std::domain_error(
                        "ResidualPolarPart: nonzero coefficient below -bound at w^" +
                        std::to_string(p) + ", q-key " + std::to_string(k));
        }
        // Trim to [-b, b] and mark fully known.
        long lo = std::max(r.lo, -b), hi = std::min(r.hi(), b);
        std::vector<Rational> nc;
        for (long p = lo; p <= hi; ++p) nc.push_back(r.c[p - r.lo]);
        r.c = std::move(nc);
        r.lo = lo;
        r.cap = CAP_INF;
        r.trim();
    }
    for (auto it = rows_.begin(); it != rows_.end();)
        it = it->second.empty() ? rows_.erase(it) : ++it;
}

void JSeries::set_coeff(const Rational& qexp, long wpow, const Rational& v) {
    if (!(qexp < qtrunc_)) return;
    long m = lcm(Int(qden_), qexp.den()).convert_to<long>();
    if (m != qden_) *this = with_qden(m);
    long k = key_of(qexp);
    URow& r = rows_[k];
    if (r.empty()) {
        r.lo = wpow;
        r.c = {v};
        return;
    }
    if (wpow < r.lo) {
        std::vector<Rational> nc(size_t(r.hi() - wpow + 1), Rational());
        std::copy(r.c.begin(), r.c.end(), nc.begin() + (r.lo - wpow));
        r.c = std::move(nc);
        r.lo = wpow;
    } else if (wpow > r.hi()) {
        r.c.resize(size_t(wpow - r.lo + 1), Rational());
    }
    r.c[wpow - r.lo] = v;
    r.trim();
}

Rational JSeries::coeff(const Rational& qexp, long wpow) const {
    Int num = qexp.num() * qden_;
    if (num % qexp.den() != 0) return Rational();
    auto it = rows_.find(num.convert_to<long>() / qexp.den().convert_to<long>());
    if (it == rows_.end()) return Rational();
    if (it->second.cap < wpow) throw std::domain_error("WindowTooNarrow: coefficient unknown");
    const Rational* p = it->second.at(wpow);
    return p ? *p : Rational();
}

JSeries JSeries::qtruncated(const Rational& t) const {
    JSeries out(qden_, std::min(t, qtrunc_));
    for (const auto& [k, r] : rows_)
        if (Rational(Int(k), Int(qden_)) < out.qtrunc_) out.rows_[k] = r;
    return out;
}

std::string JSeries::json() const {
    nlohmann::ordered_json j;
    j["den"] = qden_;
    j["trunc"] = qtrunc_.str();
    j["convention"] = "|q| < |u| < 1";
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [k, r] : rows_) {
        nlohmann::ordered_json row;
        row["q"] = k;
        row["w_lo"] = r.lo;
        if (r.cap < CAP_INF) row["w_cap"] = r.cap;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& x : r.c) arr.push_back(x.str());
        row["w"] = arr;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

} // namespace umbral
