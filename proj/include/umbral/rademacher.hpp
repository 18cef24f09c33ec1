#ifndef UMBRAL_RADEMACHER_HPP
#define UMBRAL_RADEMACHER_HPP

#include "umbral/cyclotomic.hpp"
#include "umbral/shadows.hpp"

#include <complex>
#include <vector>

namespace umbral {

/// Double with an accumulated absolute-error bound; every reported value
/// carries one.
struct Float {
    double value = 0;
    double err = 0;

    Float() = default;
    Float(double v, double e = 0) : value(v), err(e) {}
    Float operator+(const Float& o) const { return {value + o.value, err + o.err}; }
    Float operator-(const Float& o) const { return {value - o.value, err + o.err}; }
    Float operator*(const Float& o) const {
        return {value * o.value,
                std::abs(value) * o.err + std::abs(o.value) * err + err * o.err};
    }
};

struct CFloat {
    std::complex<double> value{0, 0};
    double err = 0;
    CFloat() = default;
    CFloat(std::complex<double> v, double e = 0) : value(v), err(e) {}
    CFloat operator+(const CFloat& o) const { return {value + o.value, err + o.err}; }
    CFloat operator*(const CFloat& o) const {
        return {value * o.value,
                std::abs(value) * o.err + std::abs(o.value) * err + err * o.err};
    }
};

enum class MultiplierKind {
    Trivial,          // classical Kloosterman sums
    ConjThetaLevel1,  // conjugate index-m theta (Weil) multiplier, g = e
};

struct RadSpec {
    long index_m = 2;       // theta index m; polar exponent alpha = -1/4m
    long level = 1;         // n_g (only 1 implemented)
    MultiplierKind mult = MultiplierKind::ConjThetaLevel1;
    int reg_depth = 24;     // series depth of the regularizer
};

/// Regularizer r^{[alpha]}_{1/2}(gamma, tau); exactly 1 on Gamma_infty.
/// NonConvergentDepth if the recorded tail bound exceeds tol.
CFloat rad_reg(double alpha, long a, long b, long c, long d, std::complex<double> tau,
               int depth, double tol = 1e-9);

/// Kloosterman sum over residues mod c. Trivial multiplier convention:
/// sum_{d (c)^*} e((m d + n d^{-1})/c). Exact mode returns a Cyclotomic.
Cyclotomic kloosterman_exact(long m, long n, long c);
Float kloosterman_float(long m, long n, long c);

/// Salie-type sum: sum over x mod c with x^2 = -D (mod c) of eps * e(beta x / c).
CFloat salie(long D, const Rational& beta, long c, std::complex<double> eps);
/// Number of solutions x^2 = -D mod c (brute-force oracle in tests).
long salie_solution_count(long D, long c);

/// Ascending series for I_{1/2} with a recorded tail bound.
Float bessel_I_half(double x, int depth = 40);

/// Partial Rademacher sum: Fourier coefficients of the r=1 component over the
/// cosets with 0 <= c < K. K=1 is exactly the polar term q^{-1/4m}. For c>0
/// the classical weight-1/2 Maass-Poincare coefficient formula is used with
/// the conjugate theta multiplier. Experimental-grade: no convergence claims.
/// Throws MultiplierUnavailable for specs outside the implemented multiplier.
struct RadCoefficient {
    Rational exponent;
    Float value;
};
std::vector<RadCoefficient> rad_partial(const RadSpec& spec, long K, long n_max);

/// Per-K coefficient traces as CSV (n, K=1, K=2, ..., fluctuation of last step).
std::string rad_trace_csv(const RadSpec& spec, long K_max, long n_max);

/// t^{(9)} corrections for X=A8^3, classes of order 3 resp. 6 (exact).
VectorQSeries t9_correction(const std::string& cls, const Rational& trunc);

} // namespace umbral

#endif
