#ifndef UMBRAL_HOLPROJ_HPP
#define UMBRAL_HOLPROJ_HPP

#include "umbral/verify.hpp"

namespace umbral {

/// Weight-3/2 theta combination described by period-2M sign functions:
/// sum over parts of c * S_{M,rho}, with S_{M,rho} = sum_{l = rho (2M)} l q^{l^2/4M}.
struct ThetaDecompSpec {
    long M = 1;
    std::vector<std::pair<Rational, long>> parts; // (prefactor, residue)
    bool empty() const;
};

/// Decomposition of S^X_{g,r} into S_{M,rho} pieces per the shadow case rules.
ThetaDecompSpec shadow_spec(const std::string& X, const std::string& cls, long r);

/// sgn+(N) sgn+(Ntilde) (|N+t| - |Ntilde+ttilde|), with sgn+(0) = 1.
Rational d_weight(const Rational& N, const Rational& Nt, const Rational& t, const Rational& tt);

/// Mertens' correction term, literal normalization of the theorem:
/// 2 sum_{i,j} c_i c_j sum_{m,n>0, m^2-n^2=N} phi_i(m) phi_j(n) (m-n) q^{N/4M}.
QSeries mertens_D(const ThetaDecompSpec& f, const ThetaDecompSpec& g, const Rational& trunc);

/// The umbral specialization as displayed in the paper (no outer factor 2).
QSeries umbral_D(const std::string& X, const std::string& cls, long r, const Rational& trunc);

/// F = H*S + D (or H*S_e for vanishing shadow); PoleDetected if val < 0.
QSeries holproj_F(const std::string& X, const std::string& cls, long r, const Rational& trunc);

/// Right-hand side of the replicability recursion for the q^N coefficient.
Rational recursion_eval(const std::string& X, const std::string& cls, long r, long N);

/// Ramanujan f(q) recurrence, exact for 1 <= n <= n_max.
Report f_recurrence_check(long n_max);

struct FitResult {
    std::vector<std::pair<std::string, Rational>> coeffs;
    bool verified = false;
    long checked_to = 0;
    std::string json() const;
};

/// Exact linear fit of F against the basis on coefficients 0..n_fit, with the
/// prediction verified on (n_fit, n_check]. Throws RankDeficientBasis.
FitResult quasimodular_fit(const QSeries& F,
                           const std::vector<std::pair<std::string, QSeries>>& basis, long n_fit,
                           long n_check);

} // namespace umbral

#endif
