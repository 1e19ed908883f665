"""Exact spectrum certification and three-eigenvalue feasibility filters.

Spectra are multisets of exact algebraic numbers (integers or quadratic
surds).  Certification never touches floating point: annihilating
polynomials are evaluated on the matrix over the integers, multiplicities
are confirmed by exact rank computations, and all feasibility filters are
integer congruences or rational comparisons of squares.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import algnum, core, intpoly
from .algnum import Surd, surd
from .errors import (
    AnnihilationFailsError,
    BadCliqueSizeError,
    InvalidSpectrumError,
    MultiplicityMismatchError,
    NegativeDiscriminantError,
    NegativeRadicandError,
    NotAnEigenvalueError,
    NotSmallestError,
    PreconditionFailsError,
)


# ---------------------------------------------------------------------------
# spectrum type and its text form


@dataclass(frozen=True)
class Spectrum:
    """Multiset of eigenvalues, ascending, as ((value, multiplicity), ...)."""

    pairs: tuple
    certified: bool = field(default=False, compare=False)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> list:
        return [v for v, _ in self.pairs]

    def expand(self) -> list:
        out = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def multiplicity(self, value) -> int:
        for v, m in self.pairs:
            if algnum.algebraic_eq(v, value):
                return m
        return 0

    def negate(self) -> "Spectrum":
        return spectrum([(-v, m) for v, m in self.pairs])

    def __str__(self) -> str:
        return format_spectrum(self)


def spectrum(items: Iterable[tuple]) -> Spectrum:
    """Build a Spectrum: merges duplicates, sorts ascending, checks counts."""
    merged: list = []
    for v, m in items:
        if not isinstance(m, int) or m < 0:
            raise InvalidSpectrumError(f"bad multiplicity {m!r}")
        if isinstance(v, float):
            raise InvalidSpectrumError("float eigenvalues are not exact")
        if m == 0:
            continue
        for k, (u, c) in enumerate(merged):
            if algnum.algebraic_eq(u, v):
                merged[k] = (u, c + m)
                break
        else:
            merged.append((v, m))
    merged.sort(key=lambda p: algnum.sort_key(p[0]))
    return Spectrum(tuple(merged))


def format_spectrum(spec: Spectrum) -> str:
    parts = [f"[{algnum.format_algebraic(v)}]^{m}" for v, m in spec.pairs]
    return "{" + ",".join(parts) + "}"


_PAIR_RE = re.compile(r"^\[(.+)\](?:\^(\d+))?$")


def parse_spectrum(text: str) -> Spectrum:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise InvalidSpectrumError(f"spectrum must be brace-delimited: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Spectrum(())
    pairs = []
    for chunk in body.split(","):
        m = _PAIR_RE.match(chunk.strip())
        if not m:
            raise InvalidSpectrumError(f"bad spectrum entry {chunk!r}")
        value = algnum.parse_algebraic(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        pairs.append((value, mult))
    return spectrum(pairs)


# ---------------------------------------------------------------------------
# power sums; the two trace identities every Seidel spectrum satisfies


def _as_field_pair(v) -> tuple[Fraction, Fraction, int]:
    """Represent v as u + w*sqrt(D) with rational u, w."""
    if isinstance(v, Surd):
        return Fraction(v.p, v.r), Fraction(v.q, v.r), v.D
    return Fraction(v), Fraction(0), 1


def power_sum(spec: Spectrum, k: int) -> tuple[Fraction, dict]:
    """Sigma m*v^k as (rational part, {D: coefficient of sqrt(D)})."""
    rat = Fraction(0)
    irr: dict[int, Fraction] = {}
    for v, m in spec.pairs:
        u, w, D = _as_field_pair(v)
        x, y = Fraction(1), Fraction(0)
        for _ in range(k):
            x, y = x * u + y * w * D, x * w + y * u
        rat += m * x
        if y:
            irr[D] = irr.get(D, Fraction(0)) + m * y
    return rat, {D: c for D, c in irr.items() if c}


def seidel_trace_consistent(spec: Spectrum) -> bool:
    """Trace zero and trace of the square equal to n(n-1)."""
    n = spec.order
    t1, i1 = power_sum(spec, 1)
    t2, i2 = power_sum(spec, 2)
    return t1 == 0 and not i1 and t2 == n * (n - 1) and not i2


def conjugate_closed(spec: Spectrum) -> bool:
    for v, m in spec.pairs:
        if isinstance(v, Surd) and spec.multiplicity(v.conjugate()) != m:
            return False
    return True


# ---------------------------------------------------------------------------
# small exact matrix helpers


def _matmul(a, b):
    n = len(a)
    bt = [tuple(b[i][j] for i in range(n)) for j in range(n)]
    return [[sum(x * y for x, y in zip(ra, cb)) for cb in bt] for ra in a]


def _is_zero(rows) -> bool:
    return all(all(x == 0 for x in r) for r in rows)


# ---------------------------------------------------------------------------
# certification


def _annihilating_factors(claimed: Spectrum):
    """Split a claim into integer roots and integer quadratic factors.

    Returns (ints, quads) where ints is [(v, m)] and quads is
    [(trace, norm, m, pair)] for x^2 - trace*x + norm covering a conjugate
    surd pair of joint multiplicity 2m.
    """
    ints = []
    quads = []
    seen = set()
    for v, m in claimed.pairs:
        if isinstance(v, Surd):
            if v in seen:
                continue
            conj = v.conjugate()
            cm = claimed.multiplicity(conj)
            if cm != m:
                raise MultiplicityMismatchError(conj, m, cm)
            seen.add(v)
            seen.add(conj)
            t = Fraction(2 * v.p, v.r)
            s = Fraction(v.p * v.p - v.q * v.q * v.D, v.r * v.r)
            if t.denominator != 1 or s.denominator != 1:
                raise AnnihilationFailsError(v)
            quads.append((int(t), int(s), m, (v, conj)))
        else:
            f = Fraction(v)
            if f.denominator != 1:
                # monic integer charpoly has no non-integer rational roots
                raise AnnihilationFailsError(v)
            ints.append((int(f), m))
    return ints, quads


def certify_spectrum(S: core.SeidelMatrix, claimed: Spectrum) -> Spectrum:
    """Exact certificate that S has exactly the claimed spectrum.

    Checks each multiplicity by rank (over the rationals) of the
    corresponding annihilating factor, then checks that the product of all
    factors is the zero matrix, which rules out unclaimed eigenvalues.
    """
    n = S.n
    if claimed.order != n:
        raise InvalidSpectrumError(
            f"claimed order {claimed.order} does not match matrix order {n}"
        )
    ints, quads = _annihilating_factors(claimed)
    rows = [list(r) for r in S.rows]
    sq = None
    for v, m in ints:
        shifted = [[rows[i][j] - (v if i == j else 0) for j in range(n)] for i in range(n)]
        actual = n - core.rank_exact(shifted)
        if actual != m:
            raise MultiplicityMismatchError(v, m, actual)
    if quads:
        sq = _matmul(rows, rows)
    for t, s, m, (v, _) in quads:
        mat = [
            [sq[i][j] - t * rows[i][j] + (s if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        actual = n - core.rank_exact(mat)
        if actual != 2 * m:
            raise MultiplicityMismatchError(v, 2 * m, actual)
    prod = None
    for v, _ in ints:
        f = [[rows[i][j] - (v if i == j else 0) for j in range(n)] for i in range(n)]
        prod = f if prod is None else _matmul(prod, f)
    for t, s, _, _ in quads:
        f = [
            [sq[i][j] - t * rows[i][j] + (s if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        prod = f if prod is None else _matmul(prod, f)
    if prod is None or not _is_zero(prod):
        raise AnnihilationFailsError(claimed.values())
    assert seidel_trace_consistent(claimed) and conjugate_closed(claimed)
    return Spectrum(claimed.pairs, certified=True)


# ---------------------------------------------------------------------------
# eigenvalue extraction


def integer_eigenvalues(S: core.SeidelMatrix):
    """All integer eigenvalues with multiplicities, plus the integer-root-free
    cofactor of the characteristic polynomial (ascending coefficients)."""
    p = core.charpoly_exact(S).as_list()
    roots, cofactor = intpoly.integer_roots(p)
    pairs = sorted(roots.items())
    return pairs, cofactor


def spectrum_exact(S: core.SeidelMatrix):
    """Full exact spectrum when every eigenvalue is an integer or quadratic
    surd; None when a higher-degree irreducible factor shows up."""
    p = core.charpoly_exact(S).as_list()
    roots, cofactor = intpoly.integer_roots(p)
    pairs = [(v, m) for v, m in roots.items()]
    if intpoly.degree(cofactor) > 0:
        for mult, factor in intpoly.squarefree_decomposition(cofactor):
            factor = intpoly.primitive(factor)
            if intpoly.degree(factor) != 2 or factor[2] != 1:
                return None
            lo, hi = algnum.quadratic_roots(factor[1], factor[0])
            pairs.append((lo, mult))
            pairs.append((hi, mult))
    spec = spectrum(pairs)
    if spec.order != S.n:
        return None
    return Spectrum(spec.pairs, certified=True)


def min_eigenvalue_multiplicity(S: core.SeidelMatrix, lam0: int) -> int:
    """Embedding dimension d = n - multiplicity(lam0), with an exact proof
    that lam0 is the smallest eigenvalue."""
    n = S.n
    p = core.charpoly_exact(S).as_list()
    shifted = intpoly.shift(p, lam0)
    mult = intpoly.trailing_zero_count(shifted)
    if mult == 0:
        raise NotAnEigenvalueError(lam0)
    if not intpoly.all_roots_at_least(p, lam0):
        raise NotSmallestError(lam0)
    rows = [[S.rows[i][j] - (lam0 if i == j else 0) for j in range(n)] for i in range(n)]
    assert core.rank_exact(rows) == n - mult
    return n - mult


def all_eigenvalues_at_least(M, t) -> bool:
    """Exact test that every eigenvalue of a symmetric integer matrix is >= t.

    Works on the shifted characteristic polynomial: a real-rooted monic
    polynomial has all roots >= 0 iff its coefficients alternate in sign.
    """
    p = core.charpoly_int(M)
    if isinstance(t, Fraction) and t.denominator != 1:
        shifted = intpoly.shift([Fraction(c) for c in p], t)
    else:
        shifted = intpoly.shift(p, int(t))
    d = len(shifted) - 1
    return all(((-1) ** (d - k)) * c >= 0 for k, c in enumerate(shifted))


def is_psd(M) -> bool:
    return all_eigenvalues_at_least(M, 0)


# ---------------------------------------------------------------------------
# energy


@dataclass(frozen=True)
class EnergyResult:
    lo: Fraction
    hi: Fraction
    exact: object  # int | Fraction | Surd | None
    bound: int
    meets_bound: bool
    equality: bool


def _exact_energy(spec: Spectrum):
    rat = Fraction(0)
    irr: dict[int, Fraction] = {}
    for v, m in spec.pairs:
        neg = algnum.compare(v, 0) < 0
        u, w, D = _as_field_pair(-v if neg else v)
        rat += m * u
        if w:
            irr[D] = irr.get(D, Fraction(0)) + m * w
    irr = {D: c for D, c in irr.items() if c}
    if not irr:
        return int(rat) if rat.denominator == 1 else rat
    if len(irr) > 1:
        return None
    (D, c), = irr.items()
    return surd(
        rat.numerator * c.denominator,
        c.numerator * rat.denominator,
        D,
        rat.denominator * c.denominator,
    )


def energy(S: core.SeidelMatrix, width: Fraction = Fraction(1, 10**9)) -> EnergyResult:
    """Sum of absolute eigenvalues, exact or within a certified interval."""
    n = S.n
    bound = 2 * (n - 1)
    p = core.charpoly_exact(S).as_list()
    eq_plus = intpoly.mul(_poly_pow([1, 1], n - 1), [-(n - 1), 1])
    eq_minus = intpoly.mul(_poly_pow([-1, 1], n - 1), [n - 1, 1])
    equality = p == eq_plus or p == eq_minus
    spec = spectrum_exact(S)
    if spec is not None:
        val = _exact_energy(spec)
        if val is not None:
            f = Fraction(val) if not isinstance(val, Surd) else None
            if f is not None:
                lo = hi = f
            else:
                k = 12
                slo, shi = algnum._interval(val, k)
                lo, hi = slo, shi
            meets = algnum.compare(val, bound) >= 0
            return EnergyResult(lo, hi, val, bound, meets, equality)
    zeros = intpoly.trailing_zero_count(p)
    q = p[zeros:]
    lo_mag = Fraction(abs(q[0]), abs(q[0]) + max(abs(c) for c in q[1:]))
    per_root = min(width / max(n, 1), lo_mag / 2)
    total_lo = Fraction(0)
    total_hi = Fraction(0)
    for rlo, rhi, m in intpoly.real_roots_with_multiplicity(q, per_root):
        if rhi < 0:
            alo, ahi = -rhi, -rlo
        elif rlo > 0:
            alo, ahi = rlo, rhi
        else:
            alo, ahi = Fraction(0), max(-rlo, rhi)
        total_lo += m * alo
        total_hi += m * ahi
    return EnergyResult(total_lo, total_hi, None, bound, total_lo >= bound, equality)


def _poly_pow(p, k):
    out = [1]
    for _ in range(k):
        out = intpoly.mul(out, p)
    return out


# ---------------------------------------------------------------------------
# interlacing and clique deletion


def interlacing_check(outer: Spectrum, inner: Spectrum) -> bool:
    """Eigenvalue interlacing for a principal submatrix, exact comparisons."""
    lam = outer.expand()
    mu = inner.expand()
    n, m = len(lam), len(mu)
    if m > n or m == 0:
        return False
    for i in range(m):
        if algnum.compare(lam[i], mu[i]) > 0:
            return False
        if algnum.compare(mu[i], lam[n - m + i]) > 0:
            return False
    return True


def clique_deletion_spectrum(
    lam0: int, lam1: int, n: int, d: int, c: int
) -> tuple[Spectrum, tuple[str, ...]]:
    """Predicted spectrum after deleting a c-clique of +1 entries from a
    two-eigenvalue matrix with spectrum {[lam0]^d, [lam1]^(n-d)}.

    Coincident eigenvalues merge (deleting a (lam1+1)-clique brings the new
    eigenvalue back onto lam0).
    """
    if not 1 <= c <= min(d, n - d):
        raise BadCliqueSizeError(
            f"clique size {c} outside 1..min({d},{n - d})"
        )
    warnings = ()
    if c > lam1 + 1:
        warnings = (f"clique size {c} exceeds {lam1 + 1}; prediction is vacuous",)
    pairs = [
        (lam0, d - c),
        (lam1, n - d - c),
        (lam0 + lam1 + 1 - c, 1),
        (lam0 + lam1 + 1, c - 1),
    ]
    return spectrum(pairs), warnings


def delete_clique(S: core.SeidelMatrix, rows: Sequence[int]) -> core.SeidelMatrix:
    """Principal submatrix left after removing rows that pairwise carry +1."""
    core.verify_plus_clique(S, rows)
    keep = [i for i in range(S.n) if i not in set(rows)]
    return S.submatrix(keep)


# ---------------------------------------------------------------------------
# three-eigenvalue feasibility


@dataclass(frozen=True)
class FeasibleSpectrum:
    """Candidate {[lam0]^(n-d), [mu]^m, [nu]^(d-m)} with its filter verdicts."""

    n: int
    d: int
    lam0: int
    mu: int
    nu: int
    m: int
    filter_results: tuple = ()

    def multiplicities(self) -> tuple[int, int, int]:
        return (self.n - self.d, self.m, self.d - self.m)

    def spectrum(self) -> Spectrum:
        return spectrum([(self.lam0, self.n - self.d), (self.mu, self.m), (self.nu, self.d - self.m)])

    @property
    def feasible(self) -> bool:
        return all(ok for _, ok in self.filter_results)


def standard_equations_check(fs: FeasibleSpectrum) -> bool:
    """Trace and trace-of-square identities for the three-eigenvalue shape."""
    a, b, c = fs.multiplicities()
    if min(a, b, c) < 1:
        return False
    t1 = a * fs.lam0 + b * fs.mu + c * fs.nu
    t2 = a * fs.lam0**2 + b * fs.mu**2 + c * fs.nu**2
    return t1 == 0 and t2 == fs.n * (fs.n - 1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def admissible_three_eigenvalue_order(n: int) -> bool:
    """Orders for which a Seidel matrix with exactly three distinct
    eigenvalues exists: n >= 3, n != 4, n not a prime congruent to 3 mod 4."""
    return n >= 3 and n != 4 and not (_is_prime(n) and n % 4 == 3)


def congruence_filters(fs: FeasibleSpectrum) -> tuple:
    """Named feasibility verdicts; all refer to integer spectra."""
    n, lam, mu, nu = fs.n, fs.lam0, fs.mu, fs.nu
    a, b, c = fs.multiplicities()
    esum = lam + mu + nu
    epairs = lam * mu + mu * nu + nu * lam
    det_mod4 = (
        pow(lam % 4, a, 4) * pow(mu % 4, b, 4) * pow(nu % 4, c, 4) - (1 - n)
    ) % 4 == 0
    even_ok = all(m == 1 for v, m in ((lam, a), (mu, b), (nu, c)) if v % 2 == 0)
    results = (
        ("congruence_diagonal", ((n - 1) * esum + lam * mu * nu - (n * n + n + 2)) % 4 == 0),
        ("congruence_offdiagonal", ((n - 2) * esum + epairs - (n * n + n + 1)) % 4 == 0),
        ("congruence_parity", epairs % 2 == 1),
        ("det_mod4", det_mod4),
        ("even_eigenvalue_multiplicity", even_ok),
        ("unequal_multiplicities", not (a == b == c)),
        ("two_equal_multiplicities_order", len({a, b, c}) == 3 or n % 4 != 3),
        ("admissible_order", admissible_three_eigenvalue_order(n)),
    )
    return results


@dataclass(frozen=True)
class BoundResult:
    lhs_sq: Fraction
    rhs_sq: Fraction
    holds: bool
    equality: bool


def generalized_relative_bound(n: int, d: int, lam0: int, mu, m: int) -> BoundResult:
    """|mu + lam0(n-d)/d| <= sqrt(n(d(n-1) - lam0^2(n-d)))/d * sqrt((d-m)/m),
    compared exactly on squares.  Equality forces at most three distinct
    eigenvalues."""
    if not 1 <= m <= d:
        raise PreconditionFailsError(f"multiplicity m={m} outside 1..{d}")
    radicand = n * (d * (n - 1) - lam0 * lam0 * (n - d))
    if radicand < 0:
        raise NegativeRadicandError(
            f"lam0={lam0} exceeds the relative-bound regime for (n,d)=({n},{d})"
        )
    lhs = Fraction(mu) + Fraction(lam0 * (n - d), d)
    lhs_sq = lhs * lhs
    rhs_sq = Fraction(radicand * (d - m), d * d * m)
    return BoundResult(lhs_sq, rhs_sq, lhs_sq <= rhs_sq, lhs_sq == rhs_sq)


@dataclass(frozen=True)
class EqualMultiplicityResult:
    lam0: object
    nu: object
    divisibility: bool
    half_sum: bool

    @property
    def feasible(self) -> bool:
        return self.divisibility and self.half_sum


def equal_multiplicity_solver(n: int, d: int, mu: int) -> EqualMultiplicityResult:
    """Solve for the two equal-multiplicity eigenvalues around an integer mu.

    Spectrum shape {[lam0]^(n-d), [mu]^(2d-n), [nu]^(n-d)}; both eigenvalues
    and the two divisibility conditions come out exactly.
    """
    if not (n + 1) / 2 <= d <= n - 1:
        raise PreconditionFailsError(f"need (n+1)/2 <= d <= n-1, got d={d}, n={n}")
    disc = n * (2 * (n - 1) * (n - d) + (n - 2 * d) * mu * mu)
    if disc < 0:
        raise NegativeDiscriminantError(f"discriminant {disc} < 0")
    lam0 = surd((n - 2 * d) * mu, -1, disc, 2 * (n - d))
    nu = surd((n - 2 * d) * mu, 1, disc, 2 * (n - d))
    div1 = (d * mu) % (n - d) == 0
    half = Fraction(n * (n - 1), 2) + Fraction((1 + (-1) ** mu) * d * mu, 4)
    div2 = half.denominator == 1 and int(half) % (n - d) == 0
    return EqualMultiplicityResult(lam0, nu, div1, div2)


@dataclass(frozen=True)
class ForcedSpectrumResult:
    lhs_sq: Fraction
    rhs_sq: Fraction
    holds: bool
    equality: bool
    forced: object  # Spectrum | None
    w: object  # int | None


def forced_spectrum_bound(n: int, d: int, lam0: int, mu: int, m: int) -> ForcedSpectrumResult:
    """Lower bound |mu + lam0(n-d)/d| >= sqrt(d^2 - d(m + n(lam0^2+n-1)) +
    lam0^2 n^2)/d for integer mu with eigenspace dimension m.

    A violation certifies that no Seidel matrix has these parameters.
    Equality pins the whole spectrum down to
    {[lam0]^(n-d), [mu-1]^w, [mu]^m, [mu+1]^(d-m-w)}.
    """
    if lam0 >= 0:
        raise PreconditionFailsError("lam0 must be negative")
    radicand = d * d - d * (m + n * (lam0 * lam0 + n - 1)) + lam0 * lam0 * n * n
    if radicand < 0:
        # same sign condition as lam0^2 >= d(n^2-n+m-d)/(n^2-dn)
        raise PreconditionFailsError(
            f"lam0={lam0} too large for (n,d,m)=({n},{d},{m})"
        )
    lhs = Fraction(mu) + Fraction(lam0 * (n - d), d)
    lhs_sq = lhs * lhs
    rhs_sq = Fraction(radicand, d * d)
    holds = lhs_sq >= rhs_sq
    forced = None
    w = None
    if lhs_sq == rhs_sq:
        w2 = (n - d) * lam0 + d * mu + d - m
        if w2 % 2 == 0 and 0 <= w2 // 2 <= d - m:
            w = w2 // 2
            forced = spectrum(
                [(lam0, n - d), (mu - 1, w), (mu, m), (mu + 1, d - m - w)]
            )
    return ForcedSpectrumResult(lhs_sq, rhs_sq, holds, lhs_sq == rhs_sq, forced, w)


def forced_order(d: int, lam0: int) -> int:
    """The unique order compatible with equality in the forced-spectrum
    bound: floor(d(lam0^2 - 1)/(lam0^2 - d))."""
    if not 3 <= d <= lam0 * lam0 - 2:
        raise PreconditionFailsError(f"need 3 <= d <= {lam0 * lam0 - 2}, got {d}")
    return d * (lam0 * lam0 - 1) // (lam0 * lam0 - d)


def enumerate_feasible_spectra(
    dims: Sequence[int], lam0: int, existing_max: dict
) -> list[FeasibleSpectrum]:
    """All integer three-eigenvalue parameter sets that would attain or beat
    the known line counts, surviving every congruence and bound filter.

    For each dimension d the order runs from the known maximum up to the
    relative bound; mu and nu range over integers in (lam0, n-1] by the
    Gershgorin circle bound.
    """
    out = []
    for d in dims:
        n_lo = existing_max[d]
        n_hi = d * (lam0 * lam0 - 1) // (lam0 * lam0 - d)
        for n in range(n_lo, n_hi + 1):
            for nu in range(lam0 + 1, n):
                for mu in range(lam0 + 1, nu):
                    num = (n - d) * lam0 + d * nu
                    den = nu - mu
                    if num % den:
                        continue
                    m = num // den
                    if not 1 <= m <= d - 1:
                        continue
                    fs = FeasibleSpectrum(n, d, lam0, mu, nu, m)
                    if not standard_equations_check(fs):
                        continue
                    filters = list(congruence_filters(fs))
                    bound_mu = generalized_relative_bound(n, d, lam0, mu, m)
                    bound_nu = generalized_relative_bound(n, d, lam0, nu, d - m)
                    filters.append(("relative_bound_mu", bound_mu.holds))
                    filters.append(("relative_bound_nu", bound_nu.holds))
                    filters.insert(0, ("standard_equations", True))
                    fs = FeasibleSpectrum(n, d, lam0, mu, nu, m, tuple(filters))
                    if fs.feasible:
                        out.append(fs)
    out.sort(key=lambda f: (f.d, f.n, f.mu, f.nu))
    return out


# ---------------------------------------------------------------------------
# spectra of Seidel matrices of regular graphs


def seidel_spectrum_of_regular_graph(n: int, k: int, others: Iterable[tuple]) -> Spectrum:
    """Spectrum of J - 2A - I for a k-regular graph on n vertices whose
    non-principal adjacency eigenvalues are given with multiplicities."""
    pairs = [(n - 2 * k - 1, 1)]
    total = 1
    for theta, m in others:
        pairs.append((-2 * theta - 1, m))
        total += m
    if total != n:
        raise InvalidSpectrumError(
            f"adjacency multiplicities sum to {total}, expected {n}"
        )
    return spectrum(pairs)
