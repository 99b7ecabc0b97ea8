"""Exact scalars and truncated q-series over the Gaussian rationals.

A ``QSeries`` is a dense, eagerly evaluated power series known modulo
``q**order``.  Internally the coefficients live in two parallel integer
arrays (real and imaginary numerators) over one shared positive
denominator, so ring operations stay in arbitrary-precision integer
arithmetic; ``coeff`` materialises exact ``GaussianRational`` values on
demand.  Convolution dispatches between a sparse loop, a schoolbook
double loop, and Kronecker-substitution packing into a single big-integer
multiply.  Every path is exact: no floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


class NonUnitConstantTerm(ArithmeticError):
    """Inversion requested for a series whose constant term is zero."""


class IndexBeyondOrder(IndexError):
    """Coefficient requested at or beyond the truncation order."""


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GaussianRational:
    """Exact ``a + b*i`` with arbitrary-precision rational ``a``, ``b``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    # -- basic protocol ----------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -----------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus ``re**2 + im**2`` (an exact rational)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.abs2()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    @property
    def is_real(self) -> bool:
        return not self.im

    @property
    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)
MINUS_ONE = GaussianRational(-1)
MINUS_I = GaussianRational(0, -1)


# ---------------------------------------------------------------------------
# integer convolution (exact)
# ---------------------------------------------------------------------------


def _conv_sparse(nzu, nzv, n):
    out = [0] * n
    for j, x in nzu:
        for k, y in nzv:
            idx = j + k
            if idx < n:
                out[idx] += x * y
    return out


def _conv_school(u, v, n):
    out = [0] * n
    for j in range(min(len(u), n)):
        x = u[j]
        if x:
            top = min(len(v), n - j)
            for k in range(top):
                y = v[k]
                if y:
                    out[j + k] += x * y
    return out


def _conv_kronecker(u, v, n):
    # Pack both polynomials into single integers with fixed-width signed
    # columns, multiply once, then unpack.  Column width is sized from an
    # a-priori bound on the convolution coefficients, so the result is exact.
    mu = max(abs(x) for x in u)
    mv = max(abs(x) for x in v)
    bound = mu * mv * min(len(u), len(v)) + 1
    width = (bound.bit_length() + 9) // 8 + 1  # bytes; leaves sign headroom

    def pack(vals):
        pos = b"".join((x if x > 0 else 0).to_bytes(width, "little") for x in vals)
        neg = b"".join((-x if x < 0 else 0).to_bytes(width, "little") for x in vals)
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    prod = pack(u) * pack(v)
    cols = len(u) + len(v) - 1
    data = prod.to_bytes(cols * width + width, "little", signed=True)

    out = []
    half = 1 << (8 * width - 1)
    full = 1 << (8 * width)
    carry = 0
    for i in range(min(cols, n)):
        chunk = int.from_bytes(data[i * width:(i + 1) * width], "little") + carry
        if chunk >= half:
            out.append(chunk - full)
            carry = 1
        else:
            out.append(chunk)
            carry = 0
    out.extend([0] * (n - len(out)))
    return out


def _conv(u, v, n):
    """Exact truncated convolution of two int lists, length ``n``."""
    u = u[:n]
    v = v[:n]
    nzu = [(j, x) for j, x in enumerate(u) if x]
    nzv = [(j, x) for j, x in enumerate(v) if x]
    if not nzu or not nzv:
        return [0] * n
    if len(nzu) * len(nzv) <= max(1024, 4 * n):
        return _conv_sparse(nzu, nzv, n)
    if min(len(u), len(v)) <= 64:
        return _conv_school(u, v, n)
    return _conv_kronecker(u, v, n)


def _add_lists(u, v):
    n = max(len(u), len(v))
    out = [0] * n
    for j, x in enumerate(u):
        out[j] = x
    for j, x in enumerate(v):
        out[j] += x
    return out


# ---------------------------------------------------------------------------
# QSeries
# ---------------------------------------------------------------------------


class QSeries:
    """Truncated power series in q with GaussianRational coefficients.

    ``order`` is explicit data: the series is known exactly modulo
    ``q**order``, and binary operations truncate to the minimum of the
    operand orders.  Instances are immutable by convention.
    """

    __slots__ = ("order", "_re", "_im", "_den")

    def __init__(self, coeffs=(), order=None):
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs), 1)
        if order < 1:
            raise ValueError("order must be positive")
        if len(coeffs) > order:
            raise ValueError("more coefficients than the truncation order")
        values = [_as_gaussian(c) for c in coeffs]
        if any(v is NotImplemented for v in values):
            raise TypeError("coefficients must be int, Fraction or GaussianRational")
        den = 1
        for v in values:
            den = math.lcm(den, v.re.denominator, v.im.denominator)
        re = [0] * order
        im = None
        for j, v in enumerate(values):
            re[j] = int(v.re * den)
            if v.im:
                if im is None:
                    im = [0] * order
                im[j] = int(v.im * den)
        self.order = order
        self._re = re
        self._im = im
        self._den = den

    # -- raw plumbing --------------------------------------------------------

    @classmethod
    def _raw(cls, re, im, den, order):
        self = object.__new__(cls)
        if len(re) != order or (im is not None and len(im) != order):
            raise AssertionError("raw arrays must match the order")
        if im is not None and not any(im):
            im = None
        if den < 0:
            den = -den
            re = [-x for x in re]
            im = None if im is None else [-x for x in im]
        if den == 0:
            raise AssertionError("zero denominator")
        if den != 1:
            g = den
            for x in re:
                if x:
                    g = math.gcd(g, x)
                    if g == 1:
                        break
            if g != 1 and im is not None:
                for x in im:
                    if x:
                        g = math.gcd(g, x)
                        if g == 1:
                            break
            if g > 1:
                den //= g
                re = [x // g for x in re]
                im = None if im is None else [x // g for x in im]
        self.order = order
        self._re = re
        self._im = im
        self._den = den
        return self

    @classmethod
    def zeros(cls, order):
        return cls._raw([0] * order, None, 1, order)

    @classmethod
    def one(cls, order):
        re = [0] * order
        re[0] = 1
        return cls._raw(re, None, 1, order)

    @classmethod
    def constant(cls, value, order):
        return cls.monomial(value, 0, order)

    @classmethod
    def monomial(cls, value, exponent, order):
        """The series ``value * q**exponent`` to the given order."""
        if exponent < 0:
            raise ValueError("monomial exponent must be non-negative")
        v = _as_gaussian(value)
        re = [0] * order
        im = None
        den = math.lcm(v.re.denominator, v.im.denominator)
        if exponent < order:
            re[exponent] = int(v.re * den)
            if v.im:
                im = [0] * order
                im[exponent] = int(v.im * den)
        return cls._raw(re, im, den, order)

    # -- inspection ----------------------------------------------------------

    def coeff(self, n: int) -> GaussianRational:
        """Exact coefficient of ``q**n``."""
        if not 0 <= n < self.order:
            raise IndexBeyondOrder(f"index {n} outside order {self.order}")
        im = 0 if self._im is None else self._im[n]
        return GaussianRational(Fraction(self._re[n], self._den),
                                Fraction(im, self._den))

    def coeffs(self):
        return [self.coeff(n) for n in range(self.order)]

    def is_zero(self) -> bool:
        return not any(self._re) and (self._im is None or not any(self._im))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._im or [0] * self.order, other._im or [0] * other.order
        return (self.order == other.order and self._den == other._den
                and self._re == other._re and a == b)

    __hash__ = None

    def __repr__(self):
        parts = []
        for n in range(self.order):
            c = self.coeff(n)
            if not c:
                continue
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(cs if n == 0 else (f"{cs}*q" if n == 1 else f"{cs}*q^{n}"))
            if len(parts) >= 8:
                parts.append("...")
                break
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(q^{self.order})>"

    # -- ring operations -------------------------------------------------------

    def _scalar_mul(self, value):
        v = _as_gaussian(value)
        if not v:
            return QSeries.zeros(self.order)
        d = math.lcm(v.re.denominator, v.im.denominator)
        pr = int(v.re * d)
        pi = int(v.im * d)
        re = self._re
        im = self._im
        if pi == 0:
            new_re = [pr * x for x in re]
            new_im = None if im is None else [pr * x for x in im]
        else:
            imx = im if im is not None else [0] * self.order
            new_re = [pr * x - pi * y for x, y in zip(re, imx)]
            new_im = [pr * y + pi * x for x, y in zip(re, imx)]
        return QSeries._raw(new_re, new_im, self._den * d, self.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = QSeries.constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        da, db = self._den, other._den
        d = math.lcm(da, db)
        fa, fb = d // da, d // db
        re = [fa * x + fb * y for x, y in zip(self._re[:order], other._re[:order])]
        if self._im is None and other._im is None:
            im = None
        else:
            ia = self._im or [0] * order
            ib = other._im or [0] * order
            im = [fa * x + fb * y for x, y in zip(ia[:order], ib[:order])]
        return QSeries._raw(re, im, d, order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = QSeries.constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        im = None if self._im is None else [-x for x in self._im]
        return QSeries._raw([-x for x in self._re], im, self._den, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self._scalar_mul(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        ar, ai = self._re, self._im
        br, bi = other._re, other._im
        rr = _conv(ar, br, order)
        if ai is None and bi is None:
            re, im = rr, None
        elif ai is None:
            re = rr
            im = _conv(ar, bi, order)
        elif bi is None:
            re = rr
            im = _conv(ai, br, order)
        else:
            ii = _conv(ai, bi, order)
            re = [x - y for x, y in zip(rr, ii)]
            im = _add_lists(_conv(ar, bi, order), _conv(ai, br, order))
        return QSeries._raw(re, im, self._den * other._den, order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def invert(self) -> "QSeries":
        """Two-sided inverse modulo ``q**order`` via Newton iteration."""
        c0 = self.coeff(0)
        if not c0:
            raise NonUnitConstantTerm("constant term is zero")
        n = self.order
        x = QSeries.constant(c0.inverse(), 1)
        k = 1
        while k < n:
            k = min(2 * k, n)
            a = self.truncate(k)
            x = x._pad(k)
            x = x * (QSeries.constant(2, k) - a * x)
        return x

    def truncate(self, order: int) -> "QSeries":
        if not 1 <= order <= self.order:
            raise IndexBeyondOrder(f"cannot truncate order {self.order} to {order}")
        im = None if self._im is None else self._im[:order]
        return QSeries._raw(self._re[:order], im, self._den, order)

    def _pad(self, order: int) -> "QSeries":
        # Extend with zero coefficients; only for internal iteration schemes
        # that repair the padded tail (Newton), never for honest truncations.
        if order <= self.order:
            return self.truncate(order)
        pad = [0] * (order - self.order)
        im = None if self._im is None else self._im + pad
        return QSeries._raw(self._re + pad, im, self._den, order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k``.  Negative ``k`` must not drop nonzero terms."""
        if k == 0:
            return self
        if k > 0:
            pad = [0] * k
            im = None if self._im is None else pad + self._im
            return QSeries._raw(pad + self._re, im, self._den, self.order + k)
        k = -k
        if k >= self.order:
            raise ValueError("shift would exhaust the series")
        if any(self._re[:k]) or (self._im is not None and any(self._im[:k])):
            raise ValueError("negative shift would drop nonzero coefficients")
        im = None if self._im is None else self._im[k:]
        return QSeries._raw(self._re[k:], im, self._den, self.order - k)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def series_eq(a: QSeries, b: QSeries, order: int):
    """First exponent below ``order`` where the series differ, or None."""
    if order > min(a.order, b.order):
        raise IndexBeyondOrder("comparison order exceeds a truncation order")
    ar, ai, da = a._re, a._im or (), a._den
    br, bi, db = b._re, b._im or (), b._den
    for n in range(order):
        x_im = ai[n] if ai else 0
        y_im = bi[n] if bi else 0
        if ar[n] * db != br[n] * da or x_im * db != y_im * da:
            return n
    return None


def pochhammer_inf(zeta, offset: int, modulus: int, order: int) -> QSeries:
    """The product ``(zeta*q**offset; q**modulus)_inf`` truncated to order.

    Factors whose exponent reaches the order contribute nothing below
    ``q**order`` and are skipped.  ``offset == 0`` with ``zeta == 1`` makes
    the first factor vanish, so the zero series is returned.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if offset < 0:
        raise ValueError("offset must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    z = _as_gaussian(zeta)
    if z is NotImplemented:
        raise TypeError("zeta must be an exact scalar")

    scalar = None
    e = offset
    if e == 0:
        w = GaussianRational(1) - z
        if not w:
            return QSeries.zeros(order)
        scalar = w
        e = modulus

    d = math.lcm(z.re.denominator, z.im.denominator)
    zr = int(z.re * d)
    zi = int(z.im * d)

    re = [0] * order
    re[0] = 1
    im = [0] * order if zi else None
    den = 1

    while e < order:
        if d == 1:
            if zi == 0:
                for j in range(order - 1 - e, -1, -1):
                    x = re[j]
                    if x:
                        re[j + e] -= zr * x
                    if im is not None:
                        y = im[j]
                        if y:
                            im[j + e] -= zr * y
            else:
                for j in range(order - 1 - e, -1, -1):
                    x = re[j]
                    y = im[j]
                    if x or y:
                        re[j + e] -= zr * x - zi * y
                        im[j + e] -= zr * y + zi * x
        else:
            old_re = re
            old_im = im if im is not None else [0] * order
            re = [d * x for x in old_re]
            im = [d * x for x in old_im]
            for j in range(order - e):
                x = old_re[j]
                y = old_im[j]
                if x or y:
                    re[j + e] -= zr * x - zi * y
                    im[j + e] -= zr * y + zi * x
            den *= d
        e += modulus

    out = QSeries._raw(re, im, den, order)
    if scalar is not None:
        out = out * scalar
    return out
