#ifndef UMBRAL_JSERIES_HPP
#define UMBRAL_JSERIES_HPP

#include "umbral/qseries.hpp"

#include <functional>
#include <limits>
#include <map>

namespace umbral {

inline constexpr long CAP_INF = std::numeric_limits<long>::max() / 4;

/// One q-row of a two-variable series: dense Laurent coefficients in
/// w = u^{1/2} on [lo, lo + c.size()), with w-powers above `cap` UNKNOWN
/// (window-truncated geometric tails), not zero. Powers below lo are zero.
struct URow {
    long lo = 0;
    long cap = CAP_INF;
    std::vector<Rational> c;

    bool empty() const { return c.empty(); }
    long hi() const { return lo + long(c.size()) - 1; } // last stored power
    const Rational* at(long p) const {
        if (p < lo || p > hi()) return nullptr;
        return &c[p - lo];
    }
    void trim();
};

/// Two-variable series under the fixed annulus expansion |q| < |u| < 1:
/// per-q-exponent windowed Laurent polynomials in w = u^{1/2}.
/// Exponent keys are numerators over qden; q-exponents >= qtrunc are unknown.
class JSeries {
public:
    JSeries() : qden_(1), qtrunc_(0) {}
    JSeries(long qden, Rational qtrunc) : qden_(qden), qtrunc_(std::move(qtrunc)) {}

    static JSeries j_monomial(const Rational& qexp, long wpow, const Rational& coeff,
                              const Rational& qtrunc);

    long qden() const { return qden_; }
    const Rational& qtrunc() const { return qtrunc_; }
    const std::map<long, URow>& rows() const { return rows_; }
    std::map<long, URow>& rows_mut() { return rows_; }
    bool empty() const { return rows_.empty(); }

    Rational qval() const; // lowest q-exponent with a stored row (qtrunc if none)

    JSeries with_qden(long m) const;
    JSeries operator-() const;
    JSeries scaled(const Rational& r) const;
    /// Multiplies by coeff * q^{qexp} w^{wpow}.
    JSeries shifted(const Rational& qexp, long wpow, const Rational& coeff) const;

    friend JSeries operator+(const JSeries& a, const JSeries& b);
    friend JSeries operator-(const JSeries& a, const JSeries& b);
    JSeries& operator+=(const JSeries& o) { return *this = *this + o; }
    JSeries& operator-=(const JSeries& o) { return *this = *this - o; }

    /// Dense product with exact known-region propagation:
    /// cap_c(n) = min over contributing row pairs of cap_a + lo_b, cap_b + lo_a.
    friend JSeries operator*(const JSeries& a, const JSeries& b);
    JSeries& operator*=(const JSeries& o) { return *this = *this * o; }

    /// Product restricted to the given w-columns; throws WindowTooNarrow if a
    /// requested column exceeds the provable known region of the product.
    friend JSeries mul_columns(const JSeries& a, const JSeries& b, const std::vector<long>& cols);

    /// In-place multiply by (1 + sign * coeff_q^{qstep} w^{wstep}), qstep >= 0.
    void mul_binom(const Rational& qstep, long wstep, int sign);
    /// In-place divide by the same binomial. For qstep = 0 the factor must be
    /// (1 + sign*w^{wstep}) with wstep > 0 (annulus unit): tails are window-capped.
    void div_binom(const Rational& qstep, long wstep, int sign, long window);

    /// Multiplies by a u-independent q-series (rational coefficients).
    JSeries times_qseries(const QSeries& s) const;

    /// w-column as a q-series: coefficient of w^{wpow} per q-row.
    /// Throws WindowTooNarrow if some row's cap is below wpow.
    QSeries column(long wpow) const;

    /// Asserts all stored coefficients with |w| > bound(q-exponent) vanish and
    /// that caps reach bound(..)+guard; then trims rows and marks them fully
    /// known. `bound` maps q-exponent to the allowed |w| support.
    void trim_certify(const std::function<long(const Rational&)>& bound, long guard);

    void set_coeff(const Rational& qexp, long wpow, const Rational& c);
    Rational coeff(const Rational& qexp, long wpow) const;

    JSeries qtruncated(const Rational& t) const;

    std::string json() const;

private:
    long key_of(const Rational& e) const;
    long qden_;
    Rational qtrunc_;
    std::map<long, URow> rows_;
};

/// Evaluates products over 2 threads; rows of the output are independent.
void set_jseries_threads(int n);
int jseries_threads();

} // namespace umbral

#endif
