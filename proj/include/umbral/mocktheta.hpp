#ifndef UMBRAL_MOCKTHETA_HPP
#define UMBRAL_MOCKTHETA_HPP

#include "umbral/qseries.hpp"

namespace umbral {

// Ramanujan's third-order mock theta functions, computed directly from their
// q-hypergeometric sums (independent of the Jacobi machinery).
QSeries mock_f(const Rational& trunc);
QSeries mock_phi(const Rational& trunc);
QSeries mock_chi(const Rational& trunc);
QSeries mock_omega(const Rational& trunc);
QSeries mock_rho(const Rational& trunc);

/// q -> -q on an integer-exponent series.
QSeries substitute_neg_q(const QSeries& s);

} // namespace umbral

#endif
