#!/usr/bin/env python3
"""Offline oracle for the three weight-2 fixture forms.

f44: the unique new cusp form of weight 2 for Gamma_0(44), normalized
q + O(q^3). Generated independently of the series library by counting points
on the rank-0 conductor-44 elliptic curve y^2 = x^3 + x^2 + 3x - 1
(a_p = p + 1 - #E(F_p) at good p, a_2 = 0 additive, a_11 from the
split/nonsplit tangent test at the node) and extending by Hecke
multiplicativity.

F^{(12+4)}_{8AB,1} (level 32) and F^{(12+4)}_{8AB,5} (level 64): solved by
exact linear algebra over a Lambda_d / eta-quotient spanning set, matched to
the printed initial coefficients. The Sturm bound for M_2(Gamma_0(32)) is 8
and for M_2(Gamma_0(64)) is 16, so matching coefficients q^0..q^8
(resp. q^0..q^16) pins the form uniquely in the full space; the fit is
therefore not sensitive to the choice of spanning set.

Output: data/fixtures/{f44,F12p4_8AB_1,F12p4_8AB_5}.json in the QSeries JSON
schema, plus manifest.json with sha256 hashes.
"""
import hashlib
import json
import os
from fractions import Fraction

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "fixtures")
DEPTH = 400  # q-expansion depth for f44
FIT_DEPTH = 120  # depth kept for the fitted forms


# ---------------------------------------------------------------- f44
def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def count_points(p):
    # affine points of y^2 = x^3 + x^2 + 3x - 1 over F_p, plus infinity
    n = 1
    for x in range(p):
        rhs = (x * x * x + x * x + 3 * x - 1) % p
        n += 1 + legendre(rhs, p)
    return n


def a11_sign():
    # Node of the reduction mod 11 at (x0, 0); split iff the tangent-cone
    # slope coefficient 3*x0 + 1 is a square mod 11.
    p = 11
    for x0 in range(p):
        if (x0 * x0 * x0 + x0 * x0 + 3 * x0 - 1) % p == 0 and (3 * x0 * x0 + 2 * x0 + 3) % p == 0:
            c2 = (3 * x0 + 1) % p
            return 1 if legendre(c2, p) == 1 else -1
    raise RuntimeError("no singular point found mod 11")


def gen_f44(n_max):
    a = [0] * (n_max + 1)
    a[1] = 1
    primes = [p for p in range(2, n_max + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]
    ap = {}
    for p in primes:
        if p == 2:
            ap[p] = 0  # additive reduction
        elif p == 11:
            ap[p] = a11_sign()  # multiplicative reduction
        else:
            ap[p] = p + 1 - count_points(p)
            assert ap[p] * ap[p] <= 4 * p, (p, ap[p])
    for p in primes:
        pk = p
        while pk <= n_max:
            if pk == p:
                a[pk] = ap[p]
            elif p in (2, 11):
                a[pk] = ap[p] * a[pk // p]
            else:
                a[pk] = ap[p] * a[pk // p] - p * a[pk // (p * p)]
            pk *= p
    for n in range(2, n_max + 1):
        if a[n]:
            continue
        f = 2
        m = n
        while f * f <= m:
            if m % f == 0:
                pk = f
                m //= f
                while m % f == 0:
                    pk *= f
                    m //= f
                if m > 1:
                    a[n] = a[pk] * a[m]
                break
            f += 1
    return a


# ------------------------------------------------- q-series helpers (exact)
def sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def lam(M, N):
    c = [Fraction(0)] * (N + 1)
    c[0] = Fraction(M * (M - 1), 24)
    for k in range(1, N + 1):
        v = M * sigma1(k)
        if k % M == 0:
            v -= M * M * sigma1(k // M)
        c[k] = Fraction(v)
    return c


def eta_quotient(spec, N):
    # prod eta(s tau)^e / q^{sum s e / 24}; caller tracks the exponent shift.
    c = [Fraction(0)] * (N + 1)
    c[0] = Fraction(1)
    for s, e in spec:
        for n in range(1, N // s + 1):
            step = s * n
            for _ in range(abs(e)):
                if e > 0:  # multiply by (1 - q^step)
                    for k in range(N, step - 1, -1):
                        c[k] -= c[k - step]
                else:  # divide by (1 - q^step)
                    for k in range(step, N + 1):
                        c[k] += c[k - step]
    return c


def eta_form(spec, N):
    # returns exact q-expansion with the q^{sum s e/24} prefix, or None if
    # the valuation is not integral
    val24 = sum(s * e for s, e in spec)
    if val24 % 24 != 0:
        return None
    val = val24 // 24
    body = eta_quotient(spec, N)
    c = [Fraction(0)] * (N + 1)
    for k in range(0, N + 1 - val):
        if 0 <= k + val <= N:
            c[k + val] = body[k]
    return c


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def eta_quotient_search(N, N_depth, max_abs=6, max_val=8, limit=40):
    """Holomorphic weight-2 eta quotients on Gamma_0(N) (Ligozat criteria)."""
    divs = divisors(N)
    found = []
    import itertools
    for vec in itertools.product(range(-max_abs, max_abs + 1), repeat=len(divs)):
        if sum(vec) != 4:  # weight 2
            continue
        spec = list(zip(divs, vec))
        if sum(s * e for s, e in spec) % 24 != 0:
            continue
        if sum((N // s) * e for s, e in spec) % 24 != 0:
            continue
        val = sum(s * e for s, e in spec) // 24
        if not (0 <= val <= max_val):
            continue
        ok = True
        for d in divs:
            if sum(Fraction(gcd(d, s) ** 2 * e, s) for s, e in spec) < 0:
                ok = False
                break
        if not ok:
            continue
        form = eta_form(spec, N_depth)
        if form is not None:
            found.append(form)
            if len(found) >= limit:
                break
    return found


def solve_exact(basis, targets):
    # Solve sum x_i basis_i(n) = targets[n] for all constrained n; targets is
    # a dict n -> value. Returns x or None.
    rows = sorted(targets)
    A = [[b[n] for b in basis] + [Fraction(targets[n])] for n in rows]
    m, cols = len(A), len(basis)
    # Gaussian elimination
    piv_rows = []
    r = 0
    for c in range(cols):
        sel = None
        for i in range(r, m):
            if A[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        pivot = A[r][c]
        A[r] = [v / pivot for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [v - f * w for v, w in zip(A[i], A[r])]
        piv_rows.append(c)
        r += 1
        if r == m:
            break
    # consistency: rows beyond rank must be all-zero
    for i in range(r, m):
        if any(v != 0 for v in A[i]):
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(piv_rows):
        x[c] = A[i][cols]
    return x


def combine(basis, x, N):
    c = [Fraction(0)] * (N + 1)
    for xi, b in zip(x, basis):
        if xi:
            for n in range(N + 1):
                c[n] += xi * b[n]
    return c


def qseries_json(coeffs, trunc):
    terms = [[n, f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)]
             for n, c in enumerate(coeffs) if c != 0 and n < trunc]
    return {"den": 1, "trunc": str(trunc), "terms": terms}


def main():
    os.makedirs(OUT, exist_ok=True)
    files = {}

    # f44
    a = gen_f44(DEPTH)
    assert a[1] == 1 and a[2] == 0 and a[3] == 1 and a[5] == -3, a[:6]
    files["f44.json"] = qseries_json([Fraction(v) for v in a], DEPTH)

    # F^{(12+4)}_{8AB,1}: level 32, printed 1+12q+4q^2+0+0-24q^5-16q^6+0-8q^8
    N = FIT_DEPTH
    basis32 = [lam(2, N), lam(4, N), lam(8, N), lam(16, N), lam(32, N),
               eta_form([(4, 2), (8, 2)], N)] + eta_quotient_search(32, N)
    printed1 = {0: 1, 1: 12, 2: 4, 3: 0, 4: 0, 5: -24, 6: -16, 7: 0, 8: -8}
    x = solve_exact(basis32, printed1)
    assert x is not None, "level-32 fit failed; extend the spanning set"
    F1 = combine(basis32, x, N)
    for n, v in printed1.items():
        assert F1[n] == v
    files["F12p4_8AB_1.json"] = qseries_json(F1, N)
    print("F12p4_8AB_1 =", [str(v) for v in x])

    # F^{(12+4)}_{8AB,5}: level 64, printed odd coefficients through q^15,
    # even coefficients zero through q^16.
    basis64 = [lam(2, N), lam(4, N), lam(8, N), lam(16, N), lam(32, N), lam(64, N),
               eta_form([(4, 2), (8, 2)], N), eta_form([(8, 2), (16, 2)], N),
               eta_form([(8, 8), (4, -2), (16, -2)], N)] + eta_quotient_search(64, N, max_abs=5)
    printed5 = {0: 0, 1: 3, 2: 0, 3: 4, 4: 0, 5: 6, 6: 0, 7: -8, 8: 0, 9: -9, 10: 0,
                11: 12, 12: 0, 13: -18, 14: 0, 15: -24, 16: 0}
    x5 = solve_exact(basis64, printed5)
    assert x5 is not None, "level-64 fit failed; extend the spanning set"
    F5 = combine(basis64, x5, N)
    for n, v in printed5.items():
        assert F5[n] == v
    files["F12p4_8AB_5.json"] = qseries_json(F5, N)
    print("F12p4_8AB_5 =", [str(v) for v in x5])

    manifest = {"files": {}}
    for name, payload in sorted(files.items()):
        text = json.dumps(payload, separators=(",", ":")) + "\n"
        with open(os.path.join(OUT, name), "w") as f:
            f.write(text)
        manifest["files"][name] = {
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
            "provenance": ("elliptic-curve point counts, conductor 44"
                           if name.startswith("f44") else
                           "exact linear fit over Lambda/eta spanning set; "
                           "uniqueness by the Sturm bound"),
        }
    with open(os.path.join(OUT, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote", ", ".join(sorted(files)), "and manifest.json")


if __name__ == "__main__":
    main()
