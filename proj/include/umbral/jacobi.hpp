#ifndef UMBRAL_JACOBI_HPP
#define UMBRAL_JACOBI_HPP

#include "umbral/jseries.hpp"

#include <map>
#include <string>

namespace umbral {

// ---- sparse cyclotomic two-variable series (for shifted theta products) ----

/// Sparse two-variable series with cyclotomic coefficients, keyed by
/// (q-exponent numerator, w-power). Used to assemble the symmetrized
/// shifted-theta brackets, which always demote to rational series.
struct SparseCycJ {
    long qden = 1;
    Rational qtrunc;
    std::map<std::pair<long, long>, Cyclotomic> terms;

    SparseCycJ() = default;
    SparseCycJ(long d, Rational t) : qden(d), qtrunc(std::move(t)) {}
    void add(const Rational& qexp, long wpow, const Cyclotomic& c);
    SparseCycJ operator*(const SparseCycJ& o) const;
    SparseCycJ operator+(const SparseCycJ& o) const;
    SparseCycJ scaled(const Cyclotomic& c) const;
    /// Throws if any coefficient fails to be rational.
    JSeries demoted() const;
};

/// theta_j(s*tau, a*z + rho) from the defining sum, exact phases.
SparseCycJ theta_jacobi(int j, long s, long a, const Rational& rho, const Rational& qtrunc);

// ---- rational theta machinery ---------------------------------------------

/// theta_j with theta_1's prefactor folded out: theta_1 = -i * theta_real(1,..),
/// theta_{2,3,4} = theta_real(j,..). Sparse sum form.
JSeries theta_real(int j, long s, long a, const Rational& qtrunc);

/// In-place division by theta_real(j,s,a) via the triple product form;
/// annulus tails capped at `window`.
void divide_theta_real(JSeries& x, int j, long s, long a, long window);

/// theta_j(s*tau, 0) as a q-series (j in {2,3,4}).
QSeries theta_at_zero(int j, long s, const Rational& qtrunc);

/// Index-m theta function theta_{m,r}(tau,z), integral m, sparse.
JSeries theta_index(long m, long r, const Rational& qtrunc);

/// e(-r/2) * theta_{p/2, r}(tau,z) for r = two_r/2 in Z+1/2: the phase-folded
/// half-integral index theta, which is rational.
JSeries theta_index_half_folded(long p, long two_r, const Rational& qtrunc);

// ---- polar pieces ----------------------------------------------------------

/// mu_{m,0}(tau, z [+1/2]) for integral m, annulus expansion, window-capped q^0 tail.
JSeries mu_m0(long m, bool half_shift, const Rational& qtrunc, long window);

/// Even (parity 0) / odd (parity 1) part of mu_{m,0}.
JSeries mu_parity(long m, int parity, const Rational& qtrunc, long window);

/// i * mu_{p/2,0}(tau,z) for half-integral index p/2 (rational series).
JSeries i_mu_half(long p, const Rational& qtrunc, long window);

// ---- weight-one meromorphic forms -----------------------------------------

JSeries psi_univ_11(const Rational& qtrunc, long window);   // Psi_{1,1}
JSeries psi_univ_1mh(const Rational& qtrunc, long window);  // Psi_{1,-1/2}

/// phi^{(m)}_k ladder entry, memoized and support-certified.
/// Throws UndefinedLadderEntry (domain_error) for pairs outside the ladder.
JSeries phi_ladder(long m, long k, const Rational& qtrunc, long window);

/// phi^{(18)} of the l=18 prescription (includes the theta1^12/eta^12 block).
JSeries phi18_combo(const Rational& qtrunc, long window);

/// Tabulated psi^{(ell)}_g for ell in {4,5,7,13,10+5,14+7,22+11,46+23}.
/// Throws NotTabulated (domain_error) for uncovered pairs.
JSeries psi_table(const std::string& ell, const std::string& cls, const Rational& qtrunc,
                  long window);

// ---- theta decomposition ---------------------------------------------------

struct PolarSpec {
    // Integral index: psi + even*mu^0_{m,0} + odd*mu^1_{m,0} is theta-decomposable.
    // Half-integral: psi + half * (i mu_{p/2,0}).
    Rational even, odd, half;
};

struct Decomposition {
    Rational index;            // m or p/2
    std::map<long, QSeries> H; // integral: r in 1..m; half-integral: odd 2r in 1..p
};

/// Extracts H_r as w-columns of psi+polar after verifying that the polar
/// subtraction leaves finite rows (ResidualPolarPart otherwise).
Decomposition decompose(const JSeries& psi, const Rational& index, const PolarSpec& polar,
                        long window);

/// Rebuilds sum_r H_r theta_{index,r} (+ polar) for roundtrip checks.
JSeries recompose(const Decomposition& d, const PolarSpec& polar, const Rational& qtrunc,
                  long window);

/// Default storage window for index, truncation and denominator theta slope.
long default_window(const Rational& index, const Rational& qtrunc, long slope);

} // namespace umbral

#endif
