#ifndef UMBRAL_CYCLOTOMIC_HPP
#define UMBRAL_CYCLOTOMIC_HPP

#include "umbral/rational.hpp"

#include <vector>

namespace umbral {

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial (degree phi(n)), cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
/// reduced mod the N-th cyclotomic polynomial.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), coords_(1) {}
    explicit Cyclotomic(Rational r) : n_(1), coords_{std::move(r)} {}
    Cyclotomic(long conductor, std::vector<Rational> coords);

    /// e(num/den) = exp(2*pi*i*num/den), minimal conductor.
    static Cyclotomic root_of_unity(long num, long den);
    /// sqrt(-n) for squarefree n>0, via Gauss sums (conductor n or 4n).
    static Cyclotomic sqrt_minus(long n);
    /// b_n = (-1+sqrt(-n))/2.
    static Cyclotomic b_n(long n);

    long conductor() const { return n_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws if not rational.
    Rational rational_part() const;

    Cyclotomic embedded(long conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic conj() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator*(const Rational& r) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    long n_;
    std::vector<Rational> coords_; // length phi(n_)
};

} // namespace umbral

#endif
