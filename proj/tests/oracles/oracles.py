#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Every number frozen into tests/*.cpp with an "oracle" comment is produced here,
by direct summation (mpmath, 30 digits), closed-form integration or brute-force
enumeration. Nothing in this file calls into the C++ library.

    python3 tests/oracles/oracles.py
"""
import itertools
import math

import mpmath as mp
import numpy as np

mp.mp.dps = 30
PI = mp.pi


def tail_power(n, kcap, s, odd_only=False):
    """sum_{k=n}^{kcap} k^-s, exact-ish via Hurwitz zeta differences."""
    if odd_only:
        # odd k in [n, kcap]: k = 2j+1
        j0 = (n) // 2 if n % 2 == 1 else n // 2
        first = n if n % 2 == 1 else n + 1
        last = kcap if kcap % 2 == 1 else kcap - 1
        j0 = (first - 1) // 2
        j1 = (last - 1) // 2
        return (mp.zeta(s, j0 + mp.mpf(1) / 2) - mp.zeta(s, j1 + 1 + mp.mpf(1) / 2)) / mp.mpf(2) ** s
    return mp.zeta(s, n) - mp.zeta(s, kcap + 1)


def section(title):
    print()
    print("==", title)


def tails():
    section("integrated / conjugate tails (sawtooth b_k = 1/k, x0 = 0)")
    kcap = 10**6
    t = -tail_power(100, kcap, 2)
    print("integrated_tail r=0 n=100 K=1e6      ", mp.nstr(t, 17))
    print("jump_from_integrated r=0 n=100       ", mp.nstr(-PI * 100 * t, 17))
    t = -tail_power(200, kcap, 2)
    print("jump_from_integrated r=0 n=200       ", mp.nstr(-PI * 200 * t, 17))
    # (-1)^r sum A_k/k^3 with A_k = -1/k: positive for r = 1
    t = tail_power(10, kcap, 4)
    print("integrated_tail r=1 n=10 K=1e6       ", mp.nstr(t, 17))
    print("jump_from_integrated r=1 n=10        ", mp.nstr(3 * PI * 10**3 * t, 17))
    for r in (0, 1, 2):
        t = (-1) ** r * -tail_power(200, kcap, 2 * r + 2)
        val = (-1) ** (r + 1) * (2 * r + 1) * PI * mp.mpf(200) ** (2 * r + 1) * t
        print(f"jump_from_integrated r={r} n=200       ", mp.nstr(val, 17))
    t = tail_power(50, kcap, 3)
    print("conjugate_tail r=1 n=50 K=1e6        ", mp.nstr(t, 17))
    print("jump_from_conjugate r=1 n=50         ", mp.nstr(2 * PI * 2500 * t, 17))
    t = tail_power(100, kcap, 3)
    print("jump_from_conjugate r=1 n=100        ", mp.nstr(2 * PI * 10**4 * t, 17))
    # sign: b_k = 4/(pi k) odd, A_k = -b_k at x0=0; conjugate r=1: (-1) sum A_k/k^2
    t = 4 / PI * tail_power(64, kcap, 3, odd_only=True)
    print("sign conjugate_tail r=1 n=64 K=1e6   ", mp.nstr(t, 17))
    t = 4 / PI * tail_power(128, kcap, 3, odd_only=True)
    print("sign jump_from_conjugate r=1 n=128   ", mp.nstr(2 * PI * 128**2 * t, 17))
    print("n^2 sum_{k>=n} k^-3, n=1e4 (inf)     ", mp.nstr(10**8 * mp.zeta(3, 10**4), 17))
    for r in (0, 1, 2):
        v = mp.mpf(10**4) ** (2 * r + 1) * mp.zeta(2 * r + 2, 10**4)
        print(f"Euler factor r={r} n=1e4 (inf)         ", mp.nstr(v, 17))

    section("v2 tail diagnostic (sawtooth)")
    for n in (10, 50, 100, 1000):
        print(f"u_{n} K=1e6                         ", mp.nstr(n * tail_power(n, kcap, 2), 17))


def summability():
    section("summability")
    n = 100
    terms = [4 / math.pi if k % 2 else 0.0 for k in range(1, n + 1)]
    print("fejer sign n=100                      ", math.pi * sum(terms) / n)

    # (C, alpha) mean of sign terms with mpmath binomials
    def cesaro(seq, alpha):
        n = len(seq) - 1
        num = mp.mpf(0)
        for i, s in enumerate(seq):
            num += mp.binomial(n - i + alpha - 1, n - i) * s
        return num / mp.binomial(n + alpha, n)

    seq = [4 / PI if k % 2 else 0 for k in range(1, 513)]
    print("cesaro sign alpha=0.5 n=512           ", mp.nstr(PI * cesaro(seq, mp.mpf("0.5")), 17))

    # staircase: g = sum_m (1/m)/pi G(theta - 1/m), m <= 50
    n = 1024
    ms = np.arange(1, 51)
    jumps = 1.0 / ms
    locs = 1.0 / ms
    k = np.arange(1, n + 1)
    print("staircase (C,1) n=1024 relative errors at theta_j = 1/j:")
    for j in range(1, 11):
        x = 1.0 / j
        # term_k = sum_m (J_m/pi) cos k (x - theta_m)
        terms = (jumps[:, None] / math.pi * np.cos(np.outer(x - locs, k))).sum(axis=0)
        est = math.pi * terms.mean()
        print(f"   j={j:2d} estimate={est:.12f} true={1.0/j:.12f} rel={abs(est - 1.0/j) * j:.4f}")


def chebyshev():
    section("chebyshev (sign, x = 0): x-domain integrated tail, K = 1e6")
    # c_k = 4/pi (-1)^j / k, k = 2j+1; I_k(0) = (-1)^{j+1} k/(k^2-1) + 1/(k^2-1)
    def integrated(n, K):
        ks = np.arange(n if n % 2 else n + 1, K + 1, 2, dtype=np.float64)
        j = (ks - 1) / 2
        sgn = np.where(j % 2 == 0, 1.0, -1.0)
        c = 4 / math.pi * sgn / ks
        Ik = -sgn * ks / (ks * ks - 1) + 1 / (ks * ks - 1)
        prod = c * Ik
        return math.fsum(prod[::-1])

    for n in (64, 128, 256):
        t = integrated(n, 10**6)
        print(f"n={n:3d} integrated tail={t:.17g} jump={-math.pi * n * t:.17g}")

    # single-term series c_5 = 1: int_{-1}^{0} T_5 = [T6/12 - T4/8] at 0 minus at -1
    T = lambda k, x: math.cos(k * math.acos(x))
    val = (T(6, 0) / 12 - T(4, 0) / 8) - (T(6, -1) / 12 - T(4, -1) / 8)
    print("int_{-1}^0 T_5                        ", repr(val))
    # quadrature check of that integral
    print("  (mpmath quad)                       ", mp.nstr(mp.quad(lambda y: mp.chebyt(5, y), [-1, 0]), 17))

    section("sawtooth tail bound: n * sum_{k>=n} 1/k^2 (exact infinite tail)")
    for n in (1, 10, 100, 1000):
        print(f"n={n:4d}", mp.nstr(n * mp.zeta(2, n), 17))


def periodic_sum(weight, period):
    """sum_{m>=1} weight(m)/m^2 for weight periodic with the given period."""
    return sum(weight(r) * mp.zeta(2, mp.mpf(r) / period) for r in range(1, period + 1)) / period**2


def parseval():
    section("parseval increment: (1/pi) int_0^{2pi} [f(x+pi/n)-f(x)]^2 dx")
    # sawtooth: difference = -h/2 except on a window of length h where it is -h/2 + pi
    for n in (2, 4, 8):
        h = PI / n
        lhs = ((2 * PI - h) * (h / 2) ** 2 + h * (PI - h / 2) ** 2) / PI
        # sin^2(m pi/2n) has period 2n in m: group residues, sum each class by Hurwitz zeta
        rhs = 4 * periodic_sum(lambda r: mp.sin(r * PI / (2 * n)) ** 2, 2 * n)
        print(f"sawtooth n={n} lhs={mp.nstr(lhs, 17)} rhs(inf)={mp.nstr(rhs, 17)}")
    # sign on (-pi, pi): f(x+h) - f(x) = +-2 on two windows of length h
    for n in (2, 4, 8):
        h = PI / n
        lhs = 2 * h * 4 / PI
        rhs = 4 * (4 / PI) ** 2 * periodic_sum(
            lambda r: (r % 2) * mp.sin(r * PI / (2 * n)) ** 2, 2 * n)
        print(f"sign n={n} lhs={mp.nstr(lhs, 17)} rhs(inf)={mp.nstr(rhs, 17)}")


def variation():
    section("variation brute force")

    def pvar(v, p):
        best = 0.0
        n = len(v)
        for m in range(2, n + 1):
            for idx in itertools.combinations(range(n), m):
                s = sum(abs(v[idx[i + 1]] - v[idx[i]]) ** p for i in range(m - 1))
                best = max(best, s)
        return best ** (1.0 / p)

    print("p-var zigzag p=2                      ", repr(pvar([0, 1, 0, 1], 2)))
    print("p-var monotone p=2                    ", repr(pvar([0, 0.3, 0.7, 1], 2)))
    print("lambda harmonic zigzag                ", repr(1 + 1 / 2 + 1 / 3))
    print("lambda sqrt zigzag                    ", repr(1 + 2**-0.5 + 3**-0.5))


if __name__ == "__main__":
    tails()
    summability()
    chebyshev()
    parseval()
    variation()
