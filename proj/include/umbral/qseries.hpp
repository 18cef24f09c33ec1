#ifndef UMBRAL_QSERIES_HPP
#define UMBRAL_QSERIES_HPP

#include "umbral/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

/// Exact Laurent series in q^{1/D} with explicit truncation order.
/// Stored keys k represent q^{k/D}; exponents >= trunc are unknown, not zero.
/// All stored exponents satisfy k/D < trunc.
class QSeries {
public:
    QSeries() : d_(1), trunc_(0) {}
    QSeries(long d, Rational trunc) : d_(d), trunc_(std::move(trunc)) {}

    static QSeries zero(Rational trunc) { return QSeries(1, std::move(trunc)); }
    static QSeries monomial(const Rational& exponent, Scalar c, Rational trunc);
    static QSeries one(Rational trunc) { return monomial(Rational(0l), Scalar(1), std::move(trunc)); }

    long den() const { return d_; }
    const Rational& trunc() const { return trunc_; }
    const std::map<long, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Least exponent with nonzero coefficient; nullopt if zero up to trunc.
    std::optional<Rational> valuation() const;

    /// Coefficient of q^e; zero if absent and e < trunc, throws otherwise.
    Scalar coeff(const Rational& e) const;
    /// Coefficient of q^e, treating exponents >= trunc as an error only when asked.
    bool determined(const Rational& e) const { return e < trunc_; }

    void set(const Rational& e, Scalar c);
    void add_to(const Rational& e, const Scalar& c);

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    QSeries scaled(const Scalar& c) const;
    /// Multiplies by q^e.
    QSeries shifted(const Rational& e) const;

    /// In-place multiply by (1 + sign * q^{step}); exact, preserves trunc.
    void mul_binomial(const Rational& step, int sign);
    /// In-place divide by (1 + sign * q^{step}); exact, preserves trunc.
    void div_binomial(const Rational& step, int sign);

    QSeries truncated(const Rational& t) const;

    /// Rebases to denominator m (m must be a multiple of d_).
    QSeries with_den(long m) const;

    std::string str(size_t max_terms = 12) const;

    long key_of(const Rational& e) const; // throws IncompatibleGrading if e not on grid

private:
    void normalize();
    long d_;
    Rational trunc_;
    std::map<long, Scalar> terms_;
};

/// a/b by long division; b must have a nonzero leading coefficient.
/// Throws ZeroDivisor (domain_error) if b is zero up to its truncation.
QSeries qs_div(const QSeries& a, const QSeries& b);

/// Substitution tau -> c*tau: every exponent e becomes c*e.
QSeries qs_rescale(const QSeries& a, const Rational& c);

/// Keeps exactly the exponents in Z + alpha.
/// Throws IncompatibleGrading (domain_error) if alpha is not on the grid of a.
QSeries qs_project(const QSeries& a, const Rational& alpha);

QSeries qs_pow(const QSeries& a, long e);

// ---- classical building blocks ----------------------------------------

/// sigma_1: sum of divisors on positive integers, 0 off Z (paper convention).
Rational sigma1(const Rational& n);
Int sigma1_int(long n);

/// Product over (scale, exponent) pairs of eta(scale*tau)^exponent.
QSeries eta_quotient(const std::vector<std::pair<long, long>>& spec, const Rational& trunc);

/// Lambda_M = M(M-1)/24 + M sum_{k>0} sum_{d|k} d (q^k - M q^{Mk}).
QSeries lambda_M(long M, const Rational& trunc);

/// E2 = 1 - 24 sum sigma_1(n) q^n.
QSeries e2(const Rational& trunc);

enum class ThetaMode { S, AtZero };

/// Unary theta S_{m,r} = sum_k e(mk+r/2)^{[half]} (2mk+r) q^{(2mk+r)^2/4m},
/// or its theta-at-zero variant without the linear factor.
/// m integral with r integral, or m half-integral with r in Z+1/2.
QSeries unary_theta(const Rational& m, const Rational& r, ThetaMode mode, const Rational& trunc);

// ---- JSON --------------------------------------------------------------

std::string qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

} // namespace umbral

#endif
