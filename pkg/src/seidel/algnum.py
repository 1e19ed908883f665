"""Exact arithmetic for eigenvalues of the form (p + q*sqrt(D))/r.

Seidel spectra in this library are either integers or quadratic surds, so a
canonical (p, q, D, r) quadruple with D squarefree, r > 0, q != 0 and
gcd(p, q, r) = 1 represents every value we ever need, uniquely.  Comparisons
are exact: same-field comparisons reduce to integer sign tests, mixed-field
ones refine integer-sqrt intervals until they separate.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .intpoly import squarefree_part_square


@dataclass(frozen=True, order=False)
class Surd:
    """(p + q*sqrt(D))/r, canonical.  Use surd() to construct."""

    p: int
    q: int
    D: int
    r: int

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.D)) / self.r

    def conjugate(self) -> "Surd":
        return Surd(self.p, -self.q, self.D, self.r)

    def __neg__(self):
        return Surd(-self.p, -self.q, self.D, self.r)

    def __add__(self, other):
        if isinstance(other, Rational):
            f = Fraction(other)
            num = f.numerator * self.r
            den = f.denominator
            return surd(self.p * den + num, self.q * den, self.D, self.r * den)
        if isinstance(other, Surd):
            if other.D != self.D:
                raise ValueError("cannot add surds over different fields exactly")
            return surd(
                self.p * other.r + other.p * self.r,
                self.q * other.r + other.q * self.r,
                self.D,
                self.r * other.r,
            )
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        add = self.__add__(-other if isinstance(other, Surd) else -Fraction(other))
        return add

    def __rsub__(self, other):
        return (-self).__add__(Fraction(other))

    def __mul__(self, other):
        if isinstance(other, Rational):
            f = Fraction(other)
            return surd(
                self.p * f.numerator, self.q * f.numerator, self.D, self.r * f.denominator
            )
        if isinstance(other, Surd):
            if other.D != self.D:
                raise ValueError("cannot multiply surds over different fields exactly")
            return surd(
                self.p * other.p + self.q * other.q * self.D,
                self.p * other.q + self.q * other.p,
                self.D,
                self.r * other.r,
            )
        return NotImplemented

    __rmul__ = __mul__

    def _cmp(self, other) -> int:
        return compare(self, other)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self) -> str:
        sign = "+" if self.q >= 0 else "-"
        body = f"({self.p}{sign}{abs(self.q)}*sqrt({self.D}))"
        return body if self.r == 1 else f"{body}/{self.r}"


AlgebraicNumber = object  # int | Fraction | Surd, kept loose on purpose


def surd(p: int, q: int, D: int, r: int = 1):
    """Canonicalize (p + q*sqrt(D))/r; collapses to int/Fraction when rational."""
    if r == 0:
        raise ZeroDivisionError("surd denominator is zero")
    if D < 0:
        raise ValueError("negative radicand")
    s, d = squarefree_part_square(D)
    q, D = q * s, d
    if q == 0 or D <= 1:
        val = Fraction(p + q * (1 if D == 1 else 0), r)
        return int(val) if val.denominator == 1 else val
    if r < 0:
        p, q, r = -p, -q, -r
    g = math.gcd(math.gcd(abs(p), abs(q)), r)
    return Surd(p // g, q // g, D, r // g)


def _sqrt_interval(D: int, k: int) -> tuple[Fraction, Fraction]:
    """Rational interval of width 10^-k containing sqrt(D)."""
    scale = 10**k
    lo = math.isqrt(D * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def _interval(x, k: int) -> tuple[Fraction, Fraction]:
    if isinstance(x, Surd):
        slo, shi = _sqrt_interval(x.D, k)
        if x.q >= 0:
            lo = (x.p + x.q * slo) / x.r
            hi = (x.p + x.q * shi) / x.r
        else:
            lo = (x.p + x.q * shi) / x.r
            hi = (x.p + x.q * slo) / x.r
        return lo, hi
    f = Fraction(x)
    return f, f


def compare(a, b) -> int:
    """Exact three-way comparison of ints/Fractions/Surds."""
    if not isinstance(a, Surd) and not isinstance(b, Surd):
        fa, fb = Fraction(a), Fraction(b)
        return (fa > fb) - (fa < fb)
    if isinstance(a, Surd) and isinstance(b, Surd) and a == b:
        return 0
    # a rational never equals a genuine surd, and two canonical surds are
    # equal only by representation, so refinement must terminate
    k = 1
    while True:
        alo, ahi = _interval(a, k)
        blo, bhi = _interval(b, k)
        if ahi < blo:
            return -1
        if bhi < alo:
            return 1
        k *= 2
        if k > 4096:
            raise ArithmeticError("comparison failed to separate values")


def algebraic_eq(a, b) -> bool:
    if isinstance(a, Surd) or isinstance(b, Surd):
        return isinstance(a, Surd) and isinstance(b, Surd) and a == b
    return Fraction(a) == Fraction(b)


def sort_key(x):
    """Key usable to sort mixed int/Fraction/Surd lists exactly."""
    return _CmpKey(x)


@functools.total_ordering
class _CmpKey:
    __slots__ = ("x",)

    def __init__(self, x):
        self.x = x

    def __eq__(self, other):
        return algebraic_eq(self.x, other.x)

    def __lt__(self, other):
        return compare(self.x, other.x) < 0


def quadratic_roots(b: int, c: int) -> tuple:
    """Exact roots of x^2 + b x + c, ascending; integers when possible."""
    disc = b * b - 4 * c
    if disc < 0:
        raise ValueError("complex roots are out of scope")
    lo = surd(-b, -1, disc, 2)
    hi = surd(-b, 1, disc, 2)
    return lo, hi


_SURD_RE = re.compile(
    r"^\((-?\d+)\s*([+-])\s*(\d+)\*sqrt\((\d+)\)\)(?:/(\d+))?$"
)


def format_algebraic(x) -> str:
    if isinstance(x, Surd):
        return str(x)
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_algebraic(s: str):
    s = s.strip()
    m = _SURD_RE.match(s)
    if m:
        p, sign, q, D, r = m.groups()
        qv = int(q) if sign == "+" else -int(q)
        return surd(int(p), qv, int(D), int(r) if r else 1)
    try:
        if "/" in s:
            num, den = s.split("/")
            f = Fraction(int(num), int(den))
            return int(f) if f.denominator == 1 else f
        return int(s)
    except ValueError:
        raise ValueError(f"cannot parse algebraic value {s!r}") from None


def float_value(x) -> float:
    return float(x) if isinstance(x, Surd) else float(Fraction(x))
