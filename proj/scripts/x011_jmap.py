#!/usr/bin/env python3
"""Check the j-map on X_0(11): y^2 + y = x^3 - x^2 - 10x - 20.

The map is printed as j = (P2(y) x^2 + P1(y) x + P0(y)) / (x - 16). This script evaluates
that formula, and the one with P0 and P2 exchanged, in two ways:

  1. at the rational points (5, 5) and (5, -6), whose j-values are -2^15 and -11^2;
  2. as q-expansions, using the uniformization of X_0(11) by the newform 11a, and compares
     against j(q) and j(q^11).

Only the exchanged labelling passes both checks. Pure Python with exact fractions.
"""

from fractions import Fraction as F

N = 40  # q-adic precision


def P2(y):
    return -11 * y**4 + 641 * y**3 - 452 * y**2 + 11803 * y - 14372


def P1(y):
    return -24 * y**3 + 536 * y**2 + 4540 * y + 6341


def P0(y):
    return -(y**3) + 125 * y**2 - 502 * y + 1776


PRINTED = (P2, P1, P0)  # coefficients of x^2, x, 1
SWAPPED = (P0, P1, P2)


# ---- power series helpers (lists of Fractions, index = exponent) ----

def mul(a, b, n=N):
    r = [F(0)] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                if y:
                    r[i + j] += x * y
    return r


def inv(s, n=N):
    r = [F(0)] * n
    r[0] = 1 / s[0]
    for k in range(1, n):
        r[k] = -sum(s[i] * r[k - i] for i in range(1, min(k, len(s) - 1) + 1)) / s[0]
    return r


def compose(outer, inner, n=N):
    """outer(inner(q)) for inner with zero constant term."""
    r = [F(0)] * n
    power = [F(1)] + [F(0)] * (n - 1)
    for k, c in enumerate(outer[:n]):
        if k:
            power = mul(power, inner, n)
        if c:
            for i in range(n):
                r[i] += c * power[i]
    return r


def revert(series, n=N):
    """Compositional inverse of z + O(z^2)."""
    g = [F(0)] * n
    g[1] = F(1)
    for k in range(2, n):
        g[k] = -compose(series, g, k + 1)[k]
    return g


# ---- uniformization ----

def newform(n=N):
    """q prod (1 - q^k)^2 (1 - q^{11k})^2."""
    p = [F(0)] * n
    p[0] = F(1)
    for k in range(1, n):
        for step in (k, 11 * k):
            if step >= n:
                continue
            for _ in range(2):
                for i in range(n - 1, step - 1, -1):
                    p[i] -= p[i - step]
    return [F(0)] + p[: n - 1]


def xy_series():
    """x(q) = q^-2 X(q), y(q) = q^-3 Y(q) with X, Y power series."""
    a = newform(N + 4)
    zq = [F(0)] + [a[k] / k for k in range(1, N)]  # formal logarithm evaluated on the cusp form
    a1, a2, a3, a4, a6 = 0, -1, 1, -10, -20
    M = N + 4
    z = [F(0), F(1)] + [F(0)] * (M - 2)
    z2 = mul(z, z, M)
    z3 = mul(z2, z, M)
    w = [F(0)] * M
    while True:  # w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
        w2 = mul(w, w, M)
        w3 = mul(w2, w, M)
        new = [z3[i] + a1 * mul(z, w, M)[i] + a2 * mul(z2, w, M)[i] + a3 * w2[i] + a4 * mul(z, w2, M)[i]
               + a6 * w3[i] for i in range(M)]
        if new == w:
            break
        w = new
    u_inv = inv(w[3:] + [F(0)] * 3, M)  # x = z^-2 u_inv(z), y = -z^-3 u_inv(z)
    # invariant differential dx / (2y + a1 x + a3) as a series in z, then integrate
    dx = [(i - 2) * u_inv[i] for i in range(M)]  # coefficient of z^(i-3)
    den = [-2 * u_inv[i] + (a3 if i == 3 else 0) for i in range(M)]  # coefficient of z^(i-3)
    omega = mul(dx, inv(den, M), M)
    log = [F(0)] + [omega[i] / (i + 1) for i in range(M - 1)]
    zz = compose(revert(log[:N], N), zq, N)
    u_q = compose(u_inv[:N], zz, N)
    ratio_inv = inv(zz[1:] + [F(0)], N)  # q / z
    r2 = mul(ratio_inv, ratio_inv)
    X = mul(r2, u_q)
    Y = [-c for c in mul(mul(r2, ratio_inv), u_q)]
    return X, Y


def j_series(n):
    """q j(q) as a power series."""
    def sigma3(k):
        return sum(d**3 for d in range(1, k + 1) if k % d == 0)
    e4 = [F(1)] + [F(240 * sigma3(k)) for k in range(1, n)]
    delta = [F(0)] * n
    delta[0] = F(1)
    for k in range(1, n):
        for _ in range(24):
            for i in range(n - 1, k - 1, -1):
                delta[i] -= delta[i - k]
    return mul(mul(mul(e4, e4, n), e4, n), inv(delta, n), n)


class Laurent:
    """Truncated Laurent series: value = q^v * sum c_i q^i, i < N."""

    def __init__(self, v, c):
        self.v, self.c = v, (list(c) + [F(0)] * N)[:N]

    def __add__(self, o):
        v = min(self.v, o.v)
        c = [F(0)] * N
        for s in (self, o):
            for i, x in enumerate(s.c):
                if i + s.v - v < N:
                    c[i + s.v - v] += x
        return Laurent(v, c)

    def __mul__(self, o):
        if not isinstance(o, Laurent):
            return Laurent(self.v, [o * x for x in self.c])
        return Laurent(self.v + o.v, mul(self.c, o.c))

    def __pow__(self, k):
        r = Laurent(0, [F(1)])
        for _ in range(k):
            r = r * self
        return r

    def reciprocal(self):
        shift = next(i for i, x in enumerate(self.c) if x)
        return Laurent(-(self.v + shift), inv(self.c[shift:] + [F(0)] * shift))

    def terms(self, lo, hi):
        return [self.c[e - self.v] if 0 <= e - self.v < N else F(0) for e in range(lo, hi)]


def const(a):
    return Laurent(0, [F(a)])


def poly_y(P, y):
    # P is a polynomial with integer coefficients; expand by evaluating on Laurent series.
    coeffs = {P2: (-14372, 11803, -452, 641, -11), P1: (6341, 4540, 536, -24), P0: (1776, -502, 125, -1)}[P]
    r = const(0)
    for k, c in enumerate(coeffs):
        r = r + (y ** k) * F(c)
    return r


def main():
    print("rational points")
    for name, labels in (("printed", PRINTED), ("swapped", SWAPPED)):
        vals = []
        for x, y in ((5, 5), (5, -6)):
            a, b, c = labels
            vals.append(F(a(y) * x * x + b(y) * x + c(y), x - 16))
        print(f"  {name:8s} j(5,5) = {vals[0]}, j(5,-6) = {vals[1]}")
    print("  expected j(5,5) = -32768, j(5,-6) = -121")

    X, Y = xy_series()
    x, y = Laurent(-2, X), Laurent(-3, Y)
    jq = j_series(N)
    j_tau = Laurent(-1, jq)
    j_11tau = Laurent(-11, [jq[i // 11] if i % 11 == 0 else F(0) for i in range(N)])
    window = (-11, 15)
    print(f"q-expansions, exponents {window[0]}..{window[1] - 1}")
    for name, labels in (("printed", PRINTED), ("swapped", SWAPPED)):
        a, b, c = labels
        num = poly_y(a, y) * (x ** 2) + poly_y(b, y) * x + poly_y(c, y)
        j = num * (x + const(-16)).reciprocal()
        got = j.terms(*window)
        print(f"  {name:8s} = j(q): {got == j_tau.terms(*window)},  = j(q^11): {got == j_11tau.terms(*window)}")


if __name__ == "__main__":
    main()
