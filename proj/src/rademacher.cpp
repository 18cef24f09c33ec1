#include "umbral/rademacher.hpp"

#include <numeric>
#include <sstream>

namespace umbral {

namespace {

constexpr double PI = 3.14159265358979323846;

std::complex<double> e_of(double x) {
    return {std::cos(2 * PI * x), std::sin(2 * PI * x)};
}

double lgamma_half(int k) { // Gamma(k + 3/2)
    return std::lgamma(k + 1.5);
}

} // namespace

CFloat rad_reg(double alpha, long a, long b, long c, long d, std::complex<double> tau, int depth,
               double tol) {
    if (c == 0) return {std::complex<double>(1, 0), 0};
    std::complex<double> gtau =
        (std::complex<double>(double(a), 0) * tau + double(b)) /
        (std::complex<double>(double(c), 0) * tau + double(d));
    std::complex<double> ginf(double(a) / c, 0);
    std::complex<double> w = 2.0 * PI * std::complex<double>(0, 1) * alpha * (gtau - ginf);
    // e(-alpha(gtau - ginf)) * sum_{k>=0} w^{k+1/2} / Gamma(k+3/2)
    std::complex<double> pre = std::exp(-w);
    std::complex<double> ws = std::sqrt(w);
    std::complex<double> wp = ws;
    std::complex<double> acc(0, 0);
    double tail = 0;
    for (int k = 0;; ++k) {
        std::complex<double> term = wp / std::exp(lgamma_half(k));
        acc += term;
        wp *= w;
        if (k >= depth) {
            // crude geometric tail bound from the factorial decay
            double ratio = std::abs(w) / (k + 1.5);
            tail = std::abs(term) * (ratio < 0.9 ? ratio / (1 - ratio) : 1e9);
            break;
        }
    }
    if (tail > tol) throw std::domain_error("NonConvergentDepth: regularizer tail " +
                                            std::to_string(tail));
    CFloat out;
    out.value = pre * acc;
    out.err = tail * std::abs(pre) + 1e-14 * std::abs(out.value);
    return out;
}

Cyclotomic kloosterman_exact(long m, long n, long c) {
    if (c < 1) throw std::domain_error("kloosterman: c >= 1");
    Cyclotomic acc{Rational(0l)};
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long dinv = 0;
        for (long x = 0; x < c; ++x)
            if ((d * x) % c == 1) {
                dinv = x;
                break;
            }
        if (c == 1) dinv = 0;
        acc += Cyclotomic::root_of_unity(m * d % c + n * dinv % c, c);
    }
    if (c == 1) acc = Cyclotomic(Rational(1l));
    return acc;
}

Float kloosterman_float(long m, long n, long c) {
    if (c < 1) throw std::domain_error("kloosterman: c >= 1");
    if (c == 1) return {1.0, 0.0};
    std::complex<double> acc(0, 0);
    long terms = 0;
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long dinv = 0;
        for (long x = 0; x < c; ++x)
            if ((d * x) % c == 1) {
                dinv = x;
                break;
            }
        acc += e_of(double(m * d % c + n * dinv % c) / double(c));
        ++terms;
    }
    // imaginary part cancels for the trivial multiplier; fold it into the bound
    return {acc.real(), 1e-13 * double(terms) + std::abs(acc.imag())};
}

CFloat salie(long D, const Rational& beta, long c, std::complex<double> eps) {
    if (c < 1) throw std::domain_error("salie: c >= 1");
    CFloat acc;
    for (long x = 0; x < c; ++x) {
        if (((x * x + D) % c + c) % c != 0) continue;
        double arg = beta.to_double() * double(x) / double(c);
        acc = acc + CFloat{eps * e_of(arg), 1e-14};
    }
    return acc;
}

long salie_solution_count(long D, long c) {
    long count = 0;
    for (long x = 0; x < c; ++x)
        if (((x * x + D) % c + c) % c == 0) ++count;
    return count;
}

Float bessel_I_half(double x, int depth) {
    if (x <= 0) return {0, 0};
    double acc = 0, term;
    double half = x / 2;
    for (int k = 0; k <= depth; ++k) {
        term = std::exp((2 * k + 0.5) * std::log(half) - std::lgamma(k + 1) - lgamma_half(k));
        acc += term;
    }
    term = std::exp((2 * (depth + 1) + 0.5) * std::log(half) - std::lgamma(depth + 2) -
                    lgamma_half(depth + 1));
    double ratio = half * half / ((depth + 2) * (depth + 2));
    double tail = ratio < 0.9 ? term / (1 - ratio) : 1e9;
    return {acc, tail + 1e-14 * acc};
}

namespace {

// Weil representation of the index-m theta decomposition: 2m x 2m matrices
// for the generators, multiplied along a continued-fraction word for gamma.
using CMat = std::vector<std::vector<std::complex<double>>>;

CMat weil_T(long m, bool conj) {
    CMat t(2 * m, std::vector<std::complex<double>>(2 * m));
    for (long r = 0; r < 2 * m; ++r) {
        double ph = double(r * r) / double(4 * m);
        t[r][r] = e_of(conj ? -ph : ph);
    }
    return t;
}

CMat weil_S(long m, bool conj) {
    CMat s(2 * m, std::vector<std::complex<double>>(2 * m));
    double norm = 1.0 / std::sqrt(double(2 * m));
    std::complex<double> pre = e_of(conj ? 1.0 / 8 : -1.0 / 8) * norm;
    for (long r = 0; r < 2 * m; ++r)
        for (long rp = 0; rp < 2 * m; ++rp) {
            double ph = double(r * rp) / double(2 * m);
            s[r][rp] = pre * e_of(conj ? ph : -ph);
        }
    return s;
}

CMat mat_mul(const CMat& a, const CMat& b) {
    size_t n = a.size();
    CMat c(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == std::complex<double>(0, 0)) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Decomposes gamma = (a b; c d) in SL2(Z) into S,T generators and returns the
// conjugate-theta multiplier matrix.
CMat weil_of(long m, long a, long b, long c, long d) {
    // word building via Euclidean reduction: gamma acts; we reduce to identity
    std::vector<long> word; // T-exponents interleaved with S
    long aa = a, bb = b, cc = c, dd = d;
    // use: T^n = (1 n; 0 1), S = (0 -1; 1 0). Reduce (a b; c d).
    std::vector<std::pair<char, long>> ops;
    while (cc != 0) {
        long q = (aa >= 0) == (cc >= 0) ? (std::abs(aa) / std::abs(cc)) : -((std::abs(aa) + std::abs(cc) - 1) / std::abs(cc));
        // gamma <- T^{-q} gamma: (a - q c, b - q d; c, d)
        aa -= q * cc;
        bb -= q * dd;
        ops.emplace_back('T', q);
        // gamma <- S^{-1} gamma: S^{-1} = (0 1; -1 0): (c, d; -a, -b)
        std::swap(aa, cc);
        std::swap(bb, dd);
        cc = -cc;
        dd = -dd;
        ops.emplace_back('S', 1);
    }
    // now cc == 0, aa = dd = ±1: gamma_left = T^{b'} or -T^{b'}
    // gamma = (prod of T^{q} S) * (aa bb; 0 dd)
    CMat acc = weil_T(m, true); // placeholder; build identity
    for (auto& row : acc)
        for (auto& v : row) v = 0;
    for (size_t i = 0; i < acc.size(); ++i) acc[i][i] = 1;
    CMat T1 = weil_T(m, true), S1 = weil_S(m, true);
    // Z = S^2 acts by e(theta-parity): include via S1*S1 when negating.
    if (aa < 0) {
        // -I = S^2
        acc = mat_mul(mat_mul(S1, S1), acc);
        bb = -bb;
    }
    // T^{bb}
    {
        CMat tb(acc.size(), std::vector<std::complex<double>>(acc.size()));
        for (long r = 0; r < long(acc.size()); ++r)
            tb[r][r] = e_of(-double(r * r) * double(bb) / double(4 * m));
        acc = mat_mul(tb, acc);
    }
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->first == 'S') {
            acc = mat_mul(S1, acc);
        } else {
            long q = it->second;
            CMat tq(acc.size(), std::vector<std::complex<double>>(acc.size()));
            for (long r = 0; r < long(acc.size()); ++r)
                tq[r][r] = e_of(-double(r * r) * double(q) / double(4 * m));
            acc = mat_mul(tq, acc);
        }
    }
    (void)word;
    return acc;
}

} // namespace

std::vector<RadCoefficient> rad_partial(const RadSpec& spec, long K, long n_max) {
    if (spec.mult != MultiplierKind::ConjThetaLevel1 || spec.level != 1)
        throw std::domain_error("MultiplierUnavailable: only the conjugate-theta multiplier at level 1");
    long m = spec.index_m;
    double alpha = -1.0 / double(4 * m);
    std::vector<RadCoefficient> out;
    for (long n = 0; n <= n_max; ++n) {
        Rational expo = Rational(n) - Rational(1, 4 * m);
        Float coeff = n == 0 ? Float{1.0, 0.0} : Float{0.0, 0.0}; // identity coset
        double nt = double(n) + alpha;
        if (n > 0) {
            for (long c = 1; c < K; ++c) {
                // Kloosterman-type sum with the conjugate theta multiplier.
                std::complex<double> ksum(0, 0);
                for (long d = 0; d < c; ++d) {
                    if (std::gcd(d, c) != 1) continue;
                    long a = 0, b = 0;
                    for (long x = -c; x <= c && !(a || b); ++x)
                        if ((x * d - 1) % c == 0) {
                            a = x;
                            b = (x * d - 1) / c;
                        }
                    CMat rho = weil_of(m, a, b, c, d);
                    std::complex<double> nu = std::conj(rho[1][1]);
                    ksum += nu * e_of((double(a) * alpha + double(d) * nt) / double(c));
                }
                Float bess = bessel_I_half(4 * PI * std::sqrt(-alpha * nt) / double(c));
                double pref = 2 * PI * std::pow(-alpha / nt, 0.25) / double(c);
                coeff = coeff + Float{pref * (ksum * std::complex<double>(1, 0)).real() *
                                          bess.value,
                                      pref * (std::abs(ksum) * bess.err + 1e-10)};
            }
        }
        out.push_back({expo, coeff});
    }
    return out;
}

std::string rad_trace_csv(const RadSpec& spec, long K_max, long n_max) {
    std::ostringstream os;
    os << "n";
    for (long K = 1; K <= K_max; ++K) os << ",K=" << K;
    os << ",fluctuation\n";
    std::vector<std::vector<RadCoefficient>> traces;
    for (long K = 1; K <= K_max; ++K) traces.push_back(rad_partial(spec, K, n_max));
    for (long n = 0; n <= n_max; ++n) {
        os << traces[0][n].exponent.str();
        for (auto& tr : traces) os << "," << tr[n].value.value;
        double fluct = std::abs(traces.back()[n].value.value -
                                traces[traces.size() > 1 ? traces.size() - 2 : 0][n].value.value);
        os << "," << fluct << "\n";
    }
    return os.str();
}

VectorQSeries t9_correction(const std::string& cls, const Rational& trunc) {
    VectorQSeries v;
    v.two_m = 18;
    v.trunc = trunc;
    bool order3 = cls == "3A";
    if (!order3 && cls != "6A")
        throw std::domain_error("t9_correction: classes 3A or 6A of G^{A8^3}");
    QSeries th33 = unary_theta(Rational(3l), Rational(3l), ThetaMode::AtZero, trunc);
    QSeries th30 = unary_theta(Rational(3l), Rational(0l), ThetaMode::AtZero, trunc);
    v.set(3, -th33);
    v.set(6, order3 ? th30 : -th30);
    return v;
}

} // namespace umbral
