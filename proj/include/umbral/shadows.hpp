#ifndef UMBRAL_SHADOWS_HPP
#define UMBRAL_SHADOWS_HPP

#include "umbral/groups.hpp"
#include "umbral/qseries.hpp"

#include <map>
#include <set>

namespace umbral {

/// A 2m-component vector of q-series indexed by r mod 2m, materialized on a
/// canonical subset and extended by oddness (V_{-r} = -V_r), periodicity and
/// family-specific identifications. Absent canonical components are zero;
/// residues listed in `unspecified` raise UnspecifiedComponent on access.
struct VectorQSeries {
    long two_m = 0;
    Rational trunc;
    std::map<long, QSeries> comps;               // canonical residues in [1, m]
    std::map<long, std::pair<long, int>> alias;  // r -> (canonical r', sign)
    std::set<long> unspecified;

    QSeries at(long r) const;
    bool defined(long r) const;
    void set(long r, QSeries s);
};

/// Shadow vector S^X_g assembled from twisted Euler characters and unary
/// thetas per the A/D/E case rules; components materialized for 0 < r < m.
VectorQSeries shadow(const std::string& X, const std::string& cls, const Rational& trunc);

/// Single shadow component S^X_{g,r}.
QSeries shadow_component(const std::string& X, const std::string& cls, long r,
                         const Rational& trunc);

std::string vector_qseries_to_json(const VectorQSeries& v);

} // namespace umbral

#endif
