"""Arithmetic-function and lattice-point counters.

The per-n functions here are deliberately simple loops: they are the
trusted oracles everything else is checked against.  The sweep-scale
tables delegate to the batch kernels in ``_kernels`` (numba or numpy
lane); tests pin both against the per-n oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _kernels
from .quadforms import hurwitz_H
from .report import VerificationReport, series_check, sweep_check
from .series import QSeries
from .theta import Jm


class WrongParity(ValueError):
    """The closed-form coefficient formulas are split by parity of n."""


OPEN, SHIFTED = "open", "shifted"


# ---------------------------------------------------------------------------
# divisor functions
# ---------------------------------------------------------------------------


def sigma(k: int, n: int) -> int:
    """Sum of d**k over the divisors d of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
    return total


def d_mod4(k: int, n: int) -> int:
    """Number of divisors of n congruent to k mod 4 (k in {1, 3})."""
    if k not in (1, 3):
        raise ValueError("k must be 1 or 3")
    count = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            count += d % 4 == k
            e = n // d
            if e != d:
                count += e % 4 == k
    return count


# ---------------------------------------------------------------------------
# representation counters (per-n oracles)
# ---------------------------------------------------------------------------


def rep_squares(s: int, n: int) -> int:
    """Ordered representations of n as a sum of s squares, s <= 4."""
    if not 1 <= s <= 4:
        raise ValueError("s must be between 1 and 4")
    if n < 0:
        return 0
    if s == 1:
        r = math.isqrt(n)
        return (2 if r else 1) if r * r == n else 0
    m = math.isqrt(n)
    return sum(rep_squares(s - 1, n - x * x) for x in range(-m, m + 1))


def _two_z_square(rem: int) -> int:
    """Number of z with 2*z**2 == rem."""
    if rem < 0 or rem % 2:
        return 0
    z = math.isqrt(rem // 2)
    if 2 * z * z != rem:
        return 0
    return 2 if z else 1


def signed_rep_count(n: int) -> int:
    """Sum of (-1)**(x+y+z) over integer solutions of x^2+2y^2+2z^2 = n."""
    if n < 0:
        return 0
    total = 0
    xm = math.isqrt(n)
    for x in range(-xm, xm + 1):
        rx = n - x * x
        ym = math.isqrt(rx // 2)
        for y in range(-ym, ym + 1):
            rem = rx - 2 * y * y
            if rem < 0 or rem % 2:
                continue
            z = math.isqrt(rem // 2)
            if 2 * z * z != rem:
                continue
            if z == 0:
                total += 1 if (x + y) % 2 == 0 else -1
            else:
                # z and -z carry the same sign
                total += (2 if (x + y + z) % 2 == 0 else -2)
    return total


def rep_count(n: int) -> int:
    """Number of integer solutions of x^2 + 2y^2 + 2z^2 = n."""
    if n < 0:
        return 0
    total = 0
    xm = math.isqrt(n)
    for x in range(-xm, xm + 1):
        rx = n - x * x
        ym = math.isqrt(rx // 2)
        for y in range(-ym, ym + 1):
            total += _two_z_square(rx - 2 * y * y)
    return total


def r3_triangular(n: int) -> int:
    """Ordered triples of triangular numbers summing to n."""
    if n < 0:
        return 0
    tri = []
    k = 0
    while k * (k + 1) // 2 <= n:
        tri.append(k * (k + 1) // 2)
        k += 1
    tset = set(tri)
    return sum(1 for a in tri for b in tri if a + b <= n and n - a - b in tset)


def is_three_square_excluded(n: int) -> bool:
    """True exactly when n has the form 4**a * (8b + 7)."""
    while n % 4 == 0 and n:
        n //= 4
    return n % 8 == 7


# ---------------------------------------------------------------------------
# solution triples of (2s - chi + r)(2t - chi + r) = n + r^2
# ---------------------------------------------------------------------------


def iter_solution_triples(n: int, shape: str):
    """Yield every (r, s, t) with r,s,t >= 1 solving the shape equation.

    open:    (2s + r)(2t + r) = n + r^2,   i.e. n = 2r(s+t) + 4st
    shifted: (2s-1+r)(2t-1+r) = n + r^2,   i.e. n = 2r(s+t-1) + (2s-1)(2t-1)
    """
    if shape == OPEN:
        s = 1
        while 4 * s + 2 * (s + 1) <= n:
            t = 1
            while True:
                num = n - 4 * s * t
                den = 2 * (s + t)
                if num < den:
                    break
                if num % den == 0:
                    yield num // den, s, t
                t += 1
            s += 1
    elif shape == SHIFTED:
        s = 1
        while (2 * s - 1) + 2 * s <= n:
            t = 1
            while True:
                num = n - (2 * s - 1) * (2 * t - 1)
                den = 2 * (s + t - 1)
                if num < den:
                    break
                if num % den == 0:
                    yield num // den, s, t
                t += 1
            s += 1
    else:
        raise ValueError(f"unknown shape {shape!r}")


def triple_sum(n: int, shape: str, signed: bool = False) -> int:
    """Count (or sign-count) the solution triples of the shape equation.

    For the residue classes where the count feeds an identity, the parity
    of r is forced and asserted: open shape with n = 2 mod 4 has odd r,
    shifted shape with n = 1 mod 4 has even r.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for r, s, t in iter_solution_triples(n, shape):
        if shape == OPEN and n % 4 == 2:
            assert r % 2 == 1, (n, r, s, t)
        if shape == SHIFTED and n % 4 == 1:
            assert r % 2 == 0, (n, r, s, t)
        total += (1 if (r + s + t) % 2 == 0 else -1) if signed else 1
    return total


# ---------------------------------------------------------------------------
# the sum side of the main identity
# ---------------------------------------------------------------------------


def sum_side_series(order: int) -> QSeries:
    """1 - 4*sum q^{2rs}(-1)^{r+s} - 2*sum q^{4st}(-1)^{s+t}
       - 2*sum q^{(2s-1)(2t-1)}(-1)^{s+t} - 4*(open triples, signed)
       - 4*(shifted triples, signed), all truncated below ``order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    m = order - 1
    even2, even4, odd = _kernels.pair_tables(m)
    _, open_signed, _ = _kernels.triple_tables(m, False)
    _, shifted_signed, _ = _kernels.triple_tables(m, True)
    coeffs = [0] * order
    coeffs[0] = 1
    for n in range(1, order):
        coeffs[n] = (-4 * int(even2[n]) - 2 * int(even4[n]) - 2 * int(odd[n])
                     - 4 * int(open_signed[n]) - 4 * int(shifted_signed[n]))
    return QSeries(coeffs, order)


def signed_formula_even(n: int) -> int:
    """Closed form for the signed count at even n."""
    if n < 1 or n % 2:
        raise WrongParity("needs positive even n")
    total = 0
    half = n // 2
    for r in range(1, half + 1):
        if half % r == 0:
            s = half // r
            total += -4 if (r + s) % 2 == 0 else 4
    if n % 4 == 0:
        quarter = n // 4
        for s in range(1, quarter + 1):
            if quarter % s == 0:
                t = quarter // s
                total += -2 if (s + t) % 2 == 0 else 2
    for r, s, t in iter_solution_triples(n, OPEN):
        total += -4 if (r + s + t) % 2 == 0 else 4
    return total


def signed_formula_odd(n: int) -> int:
    """Closed form for the signed count at odd n."""
    if n < 1 or n % 2 == 0:
        raise WrongParity("needs positive odd n")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            for a in {d, n // d}:
                s = (a + 1) // 2
                t = (n // a + 1) // 2
                total += -2 if (s + t) % 2 == 0 else 2
    for r, s, t in iter_solution_triples(n, SHIFTED):
        total += -4 if (r + s + t) % 2 == 0 else 4
    return total


# ---------------------------------------------------------------------------
# batch tables (kernel-backed)
# ---------------------------------------------------------------------------


def signed_rep_tables(maxn: int):
    """(signed, unsigned) counts of x^2+2y^2+2z^2 = n for all n <= maxn."""
    return _kernels.signed_rep_tables(maxn)


def rep_squares_table(s: int, maxn: int):
    return _kernels.square_rep_tables(s, maxn)


def triple_sum_tables(maxn: int, shape: str):
    """(total, signed, r_even) tables for the shape equation, n <= maxn."""
    return _kernels.triple_tables(maxn, shape == SHIFTED)


# ---------------------------------------------------------------------------
# classical identities
# ---------------------------------------------------------------------------


def three_squares_parity_check(n: int) -> bool:
    """rep_count(n) equals the number of x^2+u^2+v^2 = n solutions with
    u = v mod 2, via the explicit mutually inverse maps; for n = 0 mod 4
    additionally r3(n) = r3(n/4) = signed_rep_count(n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    xm = math.isqrt(n)
    parity_solutions = set()
    for x in range(-xm, xm + 1):
        rx = n - x * x
        um = math.isqrt(rx) if rx >= 0 else -1
        for u in range(-um, um + 1):
            rem = rx - u * u
            if rem < 0:
                continue
            v = math.isqrt(rem)
            if v * v != rem:
                continue
            for vv in {v, -v}:
                if (u - vv) % 2 == 0:
                    parity_solutions.add((x, u, vv))
    images = set()
    for x, u, v in parity_solutions:
        y, z = (u + v) // 2, (u - v) // 2
        if x * x + 2 * y * y + 2 * z * z != n:
            return False
        if (x, y + z, y - z) != (x, u, v):
            return False
        images.add((x, y, z))
    if len(images) != len(parity_solutions) or len(images) != rep_count(n):
        return False
    if n % 4 == 0:
        r3n = rep_squares(3, n)
        if not (r3n == rep_squares(3, n // 4) == signed_rep_count(n)):
            return False
    return True


def classical_checks(maxn: int) -> VerificationReport:
    """The classical square-counting identities, swept to maxn."""
    if maxn < 8:
        raise ValueError("maxn must be >= 8")
    checks = []

    r2 = _kernels.square_rep_tables(2, maxn)
    r3 = _kernels.square_rep_tables(3, maxn)
    r4 = _kernels.square_rep_tables(4, maxn)
    d1, d3 = _kernels.d_mod4_tables(maxn)
    sig = _kernels.sigma_no_mult4_table(maxn)

    checks.append(sweep_check(
        "four_square_divisor_formula",
        ((n, 8 * int(sig[n]), int(r4[n])) for n in range(1, maxn + 1))))
    checks.append(sweep_check(
        "two_square_divisor_formula",
        ((n, 4 * (int(d1[n]) - int(d3[n])), int(r2[n]))
         for n in range(1, maxn + 1))))

    tri = _kernels.triangular3_table(maxn)
    tri_sum = _kernels.triangular_sum_side(maxn + 1)
    checks.append(sweep_check(
        "triangular_triple_sum_side",
        ((n, int(tri[n]), int(tri_sum[n])) for n in range(maxn + 1))))
    # eta-quotient route: ((q^2;q^2)^2 / (q;q))^3
    order = maxn + 1
    gf = (Jm(2, order) ** 2 * Jm(1, order).invert()) ** 3
    checks.append(series_check(
        "triangular_triple_eta_quotient",
        QSeries([int(tri[n]) for n in range(order)], order), gf, order))
    checks.append(sweep_check(
        "triangular_triple_positivity",
        ((n, True, int(tri[n]) > 0) for n in range(maxn + 1))))

    pair, triple = _kernels.hlm_tables(maxn)
    checks.append(sweep_check(
        "three_square_signed_sum_formula",
        ((n,
          (6 * int(pair[n]) + 4 * int(triple[n])) * (1 if n % 2 else -1),
          int(r3[n]))
         for n in range(1, maxn + 1))))

    def r3_class_pairs():
        for n in range(1, maxn + 1):
            res = n % 8
            if res in (1, 2, 5, 6):
                yield n, 12 * hurwitz_H(4 * n), Fraction(int(r3[n]))
            elif res == 3:
                yield n, 24 * hurwitz_H(n), Fraction(int(r3[n]))
            elif res == 7:
                yield n, Fraction(0), Fraction(int(r3[n]))
            else:
                yield n, Fraction(int(r3[n // 4])), Fraction(int(r3[n]))

    checks.append(sweep_check("three_square_class_number_relations",
                              r3_class_pairs()))

    return VerificationReport("classical", {"max": maxn}, checks)
