"""Binary quadratic forms: reduction, enumeration, class numbers, Hurwitz H.

All class-number values are exact rationals.  Weighted forms are detected
literally among reduced representatives: a reduced multiple of x²+y² is
exactly (a,0,a) and of x²+xy+y² exactly (a,a,a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .report import VerificationReport, sweep_check


class NotPositiveDefinite(ValueError):
    """Operation requires a positive definite form."""


class BadDiscriminantResidue(ValueError):
    """Discriminants must be negative and congruent to 0 or 1 mod 4."""


@dataclass(frozen=True, order=True)
class QuadForm:
    """The form a*x² + b*x*y + c*y²."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    @property
    def content(self) -> int:
        return math.gcd(math.gcd(abs(self.a), abs(self.b)), abs(self.c))

    @property
    def is_primitive(self) -> bool:
        return self.content == 1

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def is_reduced(f: QuadForm) -> bool:
    """|b| <= a <= c, with b >= 0 whenever |b| == a or a == c."""
    if not f.is_positive_definite:
        raise NotPositiveDefinite(f"{f} is not positive definite")
    if not (abs(f.b) <= f.a <= f.c):
        return False
    if (abs(f.b) == f.a or f.a == f.c) and f.b < 0:
        return False
    return True


def _check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise BadDiscriminantResidue(f"{D} is not a negative discriminant")


def enumerate_reduced(D: int) -> list[QuadForm]:
    """All reduced positive definite forms of discriminant D, in
    lexicographic (a, b, c) order, each exactly once."""
    _check_discriminant(D)
    out = []
    amax = math.isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            out.append(QuadForm(a, b, c))
    return out


def enumerate_reduced_bruteforce(D: int) -> list[QuadForm]:
    """Independent slow scan over 1 <= a <= c <= |D|, |b| <= a."""
    _check_discriminant(D)
    out = []
    for a in range(1, -D + 1):
        if 3 * a * a > -D:
            break
        for c in range(a, -D + 1):
            for b in range(-a, a + 1):
                f = QuadForm(a, b, c)
                if f.discriminant == D and is_reduced(f):
                    out.append(f)
    return sorted(out)


def class_number_h(D: int) -> int:
    """Number of primitive reduced positive definite forms of discriminant D."""
    return sum(1 for f in enumerate_reduced(D) if f.is_primitive)


def hurwitz_H(N: int) -> Fraction:
    """Hurwitz class number H(N), an exact rational.

    H(N) = 0 for N = 1, 2 mod 4; H(0) = -1/12; otherwise the reduced forms
    of discriminant -N counted with weight 1/2 for (a,0,a) forms and 1/3
    for (a,a,a) forms.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if N == 0:
        return Fraction(-1, 12)
    if N % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    for f in enumerate_reduced(-N):
        if f.b == 0 and f.a == f.c:
            total += Fraction(1, 2)
        elif f.a == f.b == f.c:
            total += Fraction(1, 3)
        else:
            total += 1
    return total


def verify_hurwitz_doubling(max_n: int) -> VerificationReport:
    """H(4n) = 4H(n) for n = 3 mod 8 and H(4n) = 2H(n) for n = 7 mod 8."""
    if max_n < 7:
        raise ValueError("max_n must be >= 7")
    checks = [
        sweep_check("hurwitz_doubling_3_mod_8",
                    ((n, 4 * hurwitz_H(n), hurwitz_H(4 * n))
                     for n in range(3, max_n + 1, 8))),
        sweep_check("hurwitz_doubling_7_mod_8",
                    ((n, 2 * hurwitz_H(n), hurwitz_H(4 * n))
                     for n in range(7, max_n + 1, 8))),
    ]
    return VerificationReport("hurwitz_doubling", {"max": max_n}, checks)
