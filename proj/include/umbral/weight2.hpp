#ifndef UMBRAL_WEIGHT2_HPP
#define UMBRAL_WEIGHT2_HPP

#include "umbral/qseries.hpp"

#include <string>

namespace umbral {

/// Weight-two companion form F^{(ell)}_g for ell in {"2","3"}; label is the
/// (fused) class label. Eta/Lambda entries are computed live; f_44 and the
/// F^{(12+4)}_{8AB,*} forms are served from validated fixture files.
QSeries weight2_F(const std::string& ell, const std::string& label, const Rational& trunc);

/// Cusp forms f_{23,a}, f_{23,b} for Gamma_0(23).
QSeries f23a(const Rational& trunc);
QSeries f23b(const Rational& trunc);

/// The unique new cusp form of weight 2 for Gamma_0(44), q + O(q^3).
/// Loaded from the fixture; validation re-checks q^2 = 0, Hecke
/// multiplicativity for coprime mn <= 50 and |a_p| <= 2 sqrt(p).
QSeries f44(const Rational& trunc);

/// Auxiliary forms f^{(9)}_1, f^{(9)}_2 of the l=9 prescription.
QSeries f9(int which, const Rational& trunc);

/// F^{(12+4)}_{8AB,1} (level 32) and F^{(12+4)}_{8AB,5} (level 64) fixtures;
/// validation re-checks the printed initial coefficients.
QSeries f12p4_8AB(int which, const Rational& trunc);

} // namespace umbral

#endif
