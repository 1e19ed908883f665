"""Exact univariate polynomial arithmetic over Z and Q.

Polynomials are lists/tuples of coefficients in ascending degree order,
so ``p[k]`` is the coefficient of ``x**k``.  Integer inputs stay integer
wherever the algorithm allows; rational steps use fractions.Fraction and
results are converted back once exactness is re-established.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


def trim(p: Sequence[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence[int]) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p: Sequence) -> list:
    return [-c for c in p]


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Sequence, c) -> list:
    return trim([c * a for a in p])


def evaluate(p: Sequence, x):
    """Horner evaluation; works for int, Fraction, or anything ring-like."""
    acc = 0
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> list:
    return trim([i * c for i, c in enumerate(p)][1:])


def shift(p: Sequence[int], t: int) -> list[int]:
    """Return the coefficients of p(x + t), exactly (Taylor shift)."""
    work = list(p)
    n = len(work)
    # Repeated synthetic division by (x - (-t)) accumulates the shifted coeffs.
    out = []
    for k in range(n):
        for i in range(n - 2 - k, -1, -1):
            work[i] += t * work[i + 1]
        out.append(work[0])
        work = work[1:]
    return trim(out)


def synthetic_division(p: Sequence[int], r: int) -> tuple[list[int], int]:
    """Divide p by (x - r); return (quotient, remainder)."""
    p = trim(p)
    if not p:
        return [], 0
    q = [0] * (len(p) - 1)
    acc = p[-1]
    for i in range(len(p) - 2, -1, -1):
        q[i] = acc
        acc = p[i] + r * acc
    return q, acc


def integer_roots(p: Sequence[int]) -> tuple[dict[int, int], list[int]]:
    """All integer roots of p with multiplicities, plus the cofactor.

    Returns (roots, remainder) with p == remainder * prod (x-r)^mult and
    remainder free of integer roots.
    """
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial")
    roots: dict[int, int] = {}
    # Factor out x^k first.
    k = 0
    while p[0] == 0:
        p = p[1:]
        k += 1
    if k:
        roots[0] = k
    a0 = abs(p[0])
    # Integer roots divide a0 and obey the root bound; scanning 1..bound is
    # far cheaper than factoring a0 when the bound is small (charpolys of
    # bounded matrices have small roots but astronomically large a0).
    bound = min(root_bound(p), fujiwara_root_bound(p))
    if bound <= isqrt(a0):
        divs = {r for r in range(1, bound + 1) if a0 % r == 0}
    else:
        divs = {d for d in _divisors(a0) if d <= bound}
    candidates = sorted(divs | {-d for d in divs})
    for r in candidates:
        while len(p) > 1:
            q, rem = synthetic_division(p, r)
            if rem != 0:
                break
            roots[r] = roots.get(r, 0) + 1
            p = q
            if p[0] == 0:
                break
    return roots, p


def _divisors(a: int) -> set[int]:
    if a == 0:
        return set()
    out = set()
    i = 1
    while i * i <= a:
        if a % i == 0:
            out.add(i)
            out.add(a // i)
        i += 1
    return out


def content(p: Sequence[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g or 1


def primitive(p: Sequence[int]) -> list[int]:
    p = trim(p)
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def gcd_poly(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """Primitive gcd of integer polynomials (monic-normalized sign)."""
    a = [Fraction(c) for c in trim(p)]
    b = [Fraction(c) for c in trim(q)]
    while b:
        a, b = b, _poly_mod(a, b)
    if not a:
        return []
    # clear denominators, take primitive part
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive([int(c * den) for c in a])


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lb
        off = len(a) - 1 - db
        for i, c in enumerate(b):
            a[off + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return a


def count_distinct_roots(p: Sequence[int]) -> int:
    """deg p - deg gcd(p, p') -- counts distinct complex roots."""
    g = gcd_poly(p, derivative(p))
    return degree(p) - degree(g)


def squarefree_decomposition(p: Sequence[int]) -> list[tuple[int, list[int]]]:
    """Yun decomposition: list of (multiplicity, squarefree factor), ints."""
    p = primitive(p)
    out: list[tuple[int, list[int]]] = []
    g = gcd_poly(p, derivative(p))
    if degree(g) <= 0:
        return [(1, p)]
    w = _exact_div(p, g)
    m = 1
    while degree(w) > 0:
        y = gcd_poly(w, g)
        f = _exact_div(w, y)
        if degree(f) > 0:
            out.append((m, f))
        w, g = y, _exact_div(g, y)
        m += 1
    return out


def _exact_div(p: Sequence[int], q: Sequence[int]) -> list[int]:
    a = [Fraction(c) for c in trim(p)]
    b = trim(q)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        out[len(a) - len(b)] = f
        for i, c in enumerate(b):
            a[len(a) - len(b) + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    if a:
        raise ValueError("inexact polynomial division")
    result = []
    for c in out:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division")
        result.append(int(c))
    return trim(result)


def sturm_chain(p: Sequence[int]) -> list[list[Fraction]]:
    chain = [[Fraction(c) for c in trim(p)]]
    d = [Fraction(c) for c in derivative(p)]
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _poly_mod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi], via a Sturm chain."""
    chain = sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(p: Sequence[int]) -> int:
    """Cauchy bound: all real roots lie in (-B, B)."""
    p = trim(p)
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + (m + lead - 1) // lead


def _iroot_floor(x: int, k: int) -> int:
    """Largest r with r**k <= x, by binary search on the bit length."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x == 0 or k == 1:
        return x
    hi = 1 << ((x.bit_length() + k - 1) // k)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def fujiwara_root_bound(p: Sequence[int]) -> int:
    """All real roots lie in [-B, B] with B = 2·max_k (|c_(n-k)|/|c_n|)^(1/k).

    Grows like twice the largest root for charpolys, where the Cauchy bound
    explodes with the middle coefficients.
    """
    p = trim(p)
    n = degree(p)
    if n <= 0:
        return 1
    lead = abs(p[-1])
    best = 1
    for k in range(1, n + 1):
        c = abs(p[n - k])
        if c == 0:
            continue
        ratio = (c + lead - 1) // lead
        q = _iroot_floor(ratio, k)
        if q**k < ratio:
            q += 1
        best = max(best, q)
    return 2 * best


def isolate_real_roots(p: Sequence[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open-closed intervals (lo, hi] each holding one distinct root.

    p must be squarefree; all real roots are covered.
    """
    chain = sturm_chain(p)
    b = Fraction(root_bound(p))
    total = _sign_variations(chain, -b) - _sign_variations(chain, b)
    out: list[tuple[Fraction, Fraction]] = []

    def split(lo: Fraction, hi: Fraction, k: int):
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        # keep interval endpoints off the roots so bisection stays clean
        step = (hi - lo) / 1024
        while evaluate(chain[0], mid) == 0:
            mid += step
        left = _sign_variations(chain, lo) - _sign_variations(chain, mid)
        split(lo, mid, left)
        split(mid, hi, k - left)

    split(-b, b, total)
    return sorted(out)


def refine_root(p: Sequence[int], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating (lo, hi] for squarefree p until hi-lo < width.

    lo must not be a root (isolate_real_roots arranges this).
    """
    flo = evaluate(p, lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        fmid = evaluate(p, mid)
        if fmid == 0:
            return mid, mid
        if (flo > 0) == (fmid > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


def real_roots_with_multiplicity(p: Sequence[int], width: Fraction) -> list[tuple[Fraction, Fraction, int]]:
    """All real roots of p as (lo, hi, multiplicity) with hi-lo < width."""
    out = []
    for m, f in squarefree_decomposition(p):
        if degree(f) < 1:
            continue
        for lo, hi in isolate_real_roots(f):
            lo, hi = refine_root(f, lo, hi, width)
            out.append((lo, hi, m))
    return sorted(out)


def all_roots_at_least(p: Sequence[int], t: int) -> bool:
    """For a real-rooted integer polynomial: are all roots >= t?

    Valid because a monic real-rooted q has all roots >= 0 exactly when
    (-1)^(deg-k) q_k >= 0 for every k.
    """
    q = trim(shift(p, t))
    d = len(q) - 1
    if q[-1] < 0:
        q = [-c for c in q]
    return all(((-1) ** (d - k)) * c >= 0 for k, c in enumerate(q))


def trailing_zero_count(p: Sequence[int]) -> int:
    p = trim(p)
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return k


def squarefree_part_square(x: int) -> tuple[int, int]:
    """Write x = s^2 * d with d squarefree; return (s, d).  x > 0."""
    s, d = 1, 1
    n = x
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1
    d *= n
    return s, d


def is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x
