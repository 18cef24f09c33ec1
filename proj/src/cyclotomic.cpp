#include "umbral/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace umbral {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, quotient returned; remainder must be 0.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1);
    for (long i = long(a.size()) - 1; i >= long(b.size()) - 1; --i) {
        Int c = a[i] / b.back();
        q[i - (b.size() - 1)] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::vector<Int> compute_cyclotomic(long n) {
    // x^n - 1 divided by the product of Phi_d for proper divisors d.
    std::vector<Int> acc(n + 1);
    acc[0] = -1;
    acc[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        acc = poly_div_exact(std::move(acc), cyclotomic_polynomial(d));
    }
    return acc;
}

std::mutex phi_mutex;
std::map<long, std::vector<Int>> phi_cache;

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache.find(n);
        if (it != phi_cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coords)
    : n_(conductor), coords_(std::move(coords)) {
    size_t deg = size_t(euler_phi(n_));
    if (coords_.size() != deg) throw std::domain_error("Cyclotomic: wrong coordinate count");
}

namespace {

// Reduces a coefficient vector in powers 0..len-1 of zeta_n mod Phi_n.
std::vector<Rational> reduce_mod_phi(long n, std::vector<Rational> c) {
    const auto& phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;
    for (long i = long(c.size()) - 1; i >= long(deg); --i) {
        if (c[i].is_zero()) continue;
        Rational lead = c[i]; // Phi_n is monic
        for (size_t j = 0; j < phi.size(); ++j)
            c[i - deg + j] -= lead * Rational(phi[j]);
    }
    c.resize(deg);
    return c;
}

} // namespace

Cyclotomic Cyclotomic::root_of_unity(long num, long den) {
    if (den <= 0) throw std::domain_error("root_of_unity: bad denominator");
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num, den);
    num /= g;
    den /= g;
    std::vector<Rational> c(den, Rational(0l));
    c[num] = Rational(1l);
    return Cyclotomic(den, reduce_mod_phi(den, std::move(c)));
}

Cyclotomic Cyclotomic::sqrt_minus(long n) {
    auto legendre = [](long a, long p) {
        a %= p;
        if (a < 0) a += p;
        long r = 1, e = (p - 1) / 2, base = a;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r == 1 ? 1 : (r == 0 ? 0 : -1);
    };
    auto gauss = [&](long p) {
        // sum over a of (a|p) zeta_p^a; equals sqrt(p) or i sqrt(p) = sqrt(-p).
        Cyclotomic s(Rational(0l));
        for (long a = 1; a < p; ++a) {
            Cyclotomic z = root_of_unity(a, p);
            s = (legendre(a, p) == 1) ? s + z : s - z;
        }
        return s;
    };
    switch (n) {
        case 1: return root_of_unity(1, 4);
        case 2: return root_of_unity(1, 8) + root_of_unity(3, 8);
        case 5: return root_of_unity(1, 4) * gauss(5);
        case 15: return gauss(3) * gauss(5); // i sqrt(3) * sqrt(5)
        default:
            if (n % 4 == 3) return gauss(n); // prime n = 3 mod 4
            throw std::domain_error("sqrt_minus: unsupported n");
    }
}

Cyclotomic Cyclotomic::b_n(long n) {
    Cyclotomic s = sqrt_minus(n) - Cyclotomic(Rational(1l));
    return s * Rational(1, 2);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: not rational");
    return coords_[0];
}

Cyclotomic Cyclotomic::embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::domain_error("Cyclotomic: conductor does not divide target");
    long k = m / n_;
    std::vector<Rational> c(size_t(n_) * k, Rational(0l));
    for (size_t i = 0; i < coords_.size(); ++i) c[i * k] = coords_[i];
    return Cyclotomic(m, reduce_mod_phi(m, std::move(c)));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^{n-k}.
    std::vector<Rational> c(n_ == 1 ? 1 : n_, Rational(0l));
    if (n_ == 1) {
        c[0] = coords_[0];
        return Cyclotomic(1, std::move(c));
    }
    for (size_t i = 0; i < coords_.size(); ++i) {
        long k = i == 0 ? 0 : n_ - long(i);
        c[k] += coords_[i];
    }
    return Cyclotomic(n_, reduce_mod_phi(n_, std::move(c)));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm(Int(a.n_), Int(b.n_)).convert_to<long>();
    Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    for (size_t i = 0; i < ea.coords_.size(); ++i) ea.coords_[i] += eb.coords_[i];
    return ea;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm(Int(a.n_), Int(b.n_)).convert_to<long>();
    Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    for (size_t i = 0; i < ea.coords_.size(); ++i) ea.coords_[i] -= eb.coords_[i];
    return ea;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm(Int(a.n_), Int(b.n_)).convert_to<long>();
    Cyclotomic ea = a.embedded(m), eb = b.embedded(m);
    std::vector<Rational> c(2 * ea.coords_.size(), Rational(0l));
    for (size_t i = 0; i < ea.coords_.size(); ++i) {
        if (ea.coords_[i].is_zero()) continue;
        for (size_t j = 0; j < eb.coords_.size(); ++j) {
            if (eb.coords_[j].is_zero()) continue;
            c[i + j] += ea.coords_[i] * eb.coords_[j];
        }
    }
    return Cyclotomic(m, reduce_mod_phi(m, std::move(c)));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coords_) c *= r;
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm(Int(a.n_), Int(b.n_)).convert_to<long>();
    return a.embedded(m).coords_ == b.embedded(m).coords_;
}

} // namespace umbral
