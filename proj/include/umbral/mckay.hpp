#ifndef UMBRAL_MCKAY_HPP
#define UMBRAL_MCKAY_HPP

#include "umbral/shadows.hpp"

namespace umbral {

/// Umbral McKay-Thompson vector H^X_g to the given truncation, assembled per
/// the lambency's prescription family (theta decomposition of a meromorphic
/// Jacobi form, weight-two companion forms, phi-ladder symmetrization,
/// rescale/projection donor relations, or explicit lattice sums).
/// Results are cached per (X, fused class) at the deepest computed truncation.
VectorQSeries mct(const std::string& X, const std::string& cls, const Rational& trunc);

/// Single component H^X_{g,r}; symmetry applied, UnspecifiedComponent for the
/// one open case (D16E8, 1A, r=9).
QSeries mct_component(const std::string& X, const std::string& cls, long r,
                      const Rational& trunc);

/// Component r multiplied by -(-1)^r.
VectorQSeries parity_twist(const VectorQSeries& v);

/// qs_project(qs_rescale(donor, scale), alpha).
QSeries rescale_project(const QSeries& donor, const Rational& scale, const Rational& alpha);

/// Drops the whole cache (used by tests that probe truncation propagation).
void mct_cache_clear();

} // namespace umbral

#endif
